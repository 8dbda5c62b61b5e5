#!/usr/bin/env python3
"""Run the exact so7/G2 matrix-model checklist and print one line per check.

Usage: python scripts/verify_embedding.py
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from mindeg.so7 import run_appendix_checks


def main() -> int:
    start = time.monotonic()
    results = run_appendix_checks()
    width = max(len(r.check_name) for r in results)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.check_name:<{width}}  {r.witness}")
    print(f"{sum(r.passed for r in results)}/{len(results)} checks passed "
          f"in {time.monotonic() - start:.2f}s")
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    raise SystemExit(main())

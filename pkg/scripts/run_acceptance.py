"""Print the PASS/FAIL line of every acceptance criterion; exit 1 if any fails."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from test_acceptance import CRITERIA  # noqa: E402


def main():
    results = [crit() for crit in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    return 0 if all(results) else 1


if __name__ == "__main__":
    raise SystemExit(main())

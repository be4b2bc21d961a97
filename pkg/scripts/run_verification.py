"""
Master script to run every verification suite.

This script:
1. Runs the counter, engine, reduction, composition and parity suites
2. Prints a per-property summary
3. Saves the summary table to outputs/tables/verification_summary.csv

Usage:
    python scripts/run_verification.py
"""

import sys
import time
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pandas as pd

from src.cli_toolkit.suites import SUITES, run_suite
from src.config import get_settings


def main():
    """
    Main function to orchestrate the verification suites.
    """
    print("\n" + "=" * 60)
    print("SWITCH-GRAPH TOOLKIT - VERIFICATION SUITES")
    print("=" * 60)

    settings = get_settings()
    print(f"\n[INFO] Seed: {settings.seed}")

    output_dir = Path("outputs/tables")
    output_dir.mkdir(parents=True, exist_ok=True)

    frames = []
    failed_suites = []
    for suite in SUITES:
        print(f"\n### Suite: {suite} ###")
        start = time.perf_counter()
        try:
            report = run_suite(suite, settings.seed, path_limit=settings.path_limit)
        except Exception as e:
            print(f"[ERROR] Suite {suite} crashed: {e}")
            failed_suites.append(suite)
            continue

        elapsed = time.perf_counter() - start
        frame = report.to_frame()
        frame["seconds"] = round(elapsed, 2)
        frames.append(frame)
        print(frame.to_string(index=False))
        if report.passed:
            print(f"[OK] {suite} passed in {elapsed:.1f}s")
        else:
            print(f"[ERROR] {suite} failed")
            failed_suites.append(suite)

    if frames:
        summary = pd.concat(frames, ignore_index=True)
        summary_file = output_dir / "verification_summary.csv"
        summary.to_csv(summary_file, index=False)
        print(f"\n[SAVED] Summary saved to: {summary_file}")

    print("\n" + "=" * 60)
    print("VERIFICATION SUMMARY")
    print("=" * 60)
    if failed_suites:
        print(f"[ERROR] Failed suites: {', '.join(failed_suites)}")
        return False
    print(f"[OK] All {len(SUITES)} suites passed")
    return True


if __name__ == "__main__":
    success = main()
    exit(0 if success else 1)

"""
Command-line entry point for the switch-graph toolkit.

Usage:
    python scripts/switchgraph.py sim-arrival data/corpus/trivial_arrival.txt
    python scripts/switchgraph.py reduce --from dagpaths data/corpus/dag_diamond.txt --out outputs/instances/diamond.txt
    python scripts/switchgraph.py verify --suite prop2 --seed 42 --cases 200
"""

import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.cli_toolkit.cli import main

if __name__ == "__main__":
    sys.exit(main())

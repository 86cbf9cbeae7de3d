"""Run the simulate command with python -m qfourier"""

# Standard library imports
import sys

# QFourier imports
from qfourier.cli import main

if __name__ == "__main__":
    sys.exit(main())

"""
Package entrypoint.

Allows running the CLI via: python -m summability {matrix|colsums|bernoulli|verify} [options]
"""

import sys

from summability.cli import main

if __name__ == "__main__":
    sys.exit(main())

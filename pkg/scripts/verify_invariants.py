"""Run the structural invariant suite of the tempered engine (default n <= 8)."""

import sys

from tempered_fd.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-invariants", "--format", "table", *sys.argv[1:]]))

"""Check |C| = 1/2 for the positive and mixed families (default n <= 4)."""

import sys

from tempered_fd.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-constants", "--format", "table", *sys.argv[1:]]))

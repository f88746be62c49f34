"""Recompute every character list of the (2,2,2) worked example and compare with the stored fixture."""

import sys

from tempered_fd.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-example", "--format", "table", *sys.argv[1:]]))

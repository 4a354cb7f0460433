"""Console entry point for the hodge-levels command."""

import sys
from typing import List, Optional

from cli.app import app


def run(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code: 0 success, 1 domain error, 2 usage error."""
    try:
        app(args=argv, prog_name="hodge-levels")
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0


def cli():
    sys.exit(run())


if __name__ == "__main__":
    cli()

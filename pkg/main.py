"""
Main entry point for kpztail.
Loads a .env file from the working directory, then dispatches the command line.
"""

import sys

from dotenv import load_dotenv

from Cli.commands import parse_and_run


def main() -> int:
    load_dotenv()
    return parse_and_run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())

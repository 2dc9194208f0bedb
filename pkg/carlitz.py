import sys

from carlitz_toolbox.cli import main


if __name__ == "__main__":
    sys.exit(main())

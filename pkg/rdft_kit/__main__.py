"""Run the harness CLI with ``python -m rdft_kit``."""

from rdft_kit.cli import main

if __name__ == "__main__":
    main()

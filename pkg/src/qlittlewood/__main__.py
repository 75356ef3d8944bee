"""Allow running as `python -m qlittlewood`."""

from qlittlewood.cli import main

main()

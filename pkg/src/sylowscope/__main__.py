"""Allow running with `python -m sylowscope`."""

from sylowscope.cli import main

main()

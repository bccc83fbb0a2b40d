"""Run the command-line interface with `python -m vqbic`."""

import sys

from .cli.main import main

sys.exit(main())

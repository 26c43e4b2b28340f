"""Module entry point: `python -m matvar`."""

import sys

from .cli import main

sys.exit(main())

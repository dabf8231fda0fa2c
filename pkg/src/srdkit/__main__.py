"""Allow ``python -m srdkit``."""

import sys

from .cli import main

sys.exit(main())

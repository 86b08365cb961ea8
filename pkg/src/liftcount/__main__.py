"""Allow ``python -m liftcount``."""

import sys

from liftcount.cli import main

sys.exit(main())

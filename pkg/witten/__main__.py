__author__ = 'max'

import sys

from witten.cli import main

sys.exit(main())

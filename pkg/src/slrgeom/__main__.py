import sys

from slrgeom.cli import main

sys.exit(main())

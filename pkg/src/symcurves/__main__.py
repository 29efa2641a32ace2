import sys

from symcurves.cli import main

sys.exit(main())

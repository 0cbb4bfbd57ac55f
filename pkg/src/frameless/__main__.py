import sys

from frameless.cli import main

sys.exit(main())

import sys

from symchar.cli import main

sys.exit(main())

import sys

from symineq.cli import main

sys.exit(main())

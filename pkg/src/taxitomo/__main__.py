import sys

from taxitomo.cli import main

sys.exit(main())

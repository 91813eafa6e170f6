import sys

from lorentzhom.cli import main

sys.exit(main())

import sys

from hamspan.cli import main

sys.exit(main())

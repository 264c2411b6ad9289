import sys

from braidtorus.cli import main

sys.exit(main())

import sys

from ncdissect.cli import main

sys.exit(main())

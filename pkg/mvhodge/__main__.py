import sys
from mvhodge.cli import main

sys.exit(main())

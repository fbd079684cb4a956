import sys

from wmfock.cli import main

sys.exit(main())

import sys

from heps.cli.main import main

sys.exit(main())

import sys
from homcode.cli import main

sys.exit(main())

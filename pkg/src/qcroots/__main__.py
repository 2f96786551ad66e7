import sys

from qcroots.cli import main

sys.exit(main())

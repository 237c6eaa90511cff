from wknots.cli import main
import sys

sys.exit(main())

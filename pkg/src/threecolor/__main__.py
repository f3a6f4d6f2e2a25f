from threecolor.cli import main
import sys

sys.exit(main())

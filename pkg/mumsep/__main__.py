import sys

from mumsep.cli import cmd_main

sys.exit(cmd_main())

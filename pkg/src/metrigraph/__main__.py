from metrigraph.cli import main
import sys
sys.exit(main())

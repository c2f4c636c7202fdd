"""Application main entry point."""

import sys

if __name__ == "__main__":
    from .app.app import main
    sys.exit(main())

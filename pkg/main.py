"""Legacy main entry point for backwards compatibility."""

import sys

if __name__ == "__main__":
    from icausal.app.app import main
    sys.exit(main())

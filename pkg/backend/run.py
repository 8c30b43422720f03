"""
Main entry point for the read-once recognition toolkit

The configuration comes from --env or READONCE_ENV (default development).
"""
import sys

from readonce.cli import main

if __name__ == '__main__':
    sys.exit(main())

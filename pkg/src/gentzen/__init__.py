"""Executable Gentzen-style consistency machinery for Peano Arithmetic."""
import sys

# proof trees produced by cut elimination nest deeply
if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)

__version__ = "0.1.0"

"""
Terminal utilities for the command-line front end
"""
from .progress import Spinner

__all__ = ['Spinner']

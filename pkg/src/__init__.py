"""Purity Lab - exact purity and n-purity checks for modules over Z and Z/m"""

__version__ = "0.1.0"

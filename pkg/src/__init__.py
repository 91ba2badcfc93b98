"""
hypsec - exact graded Lie algebras of surfaces and configuration spaces, and
section-obstruction checks for the graded hyperelliptic Birman sequences.
"""

__version__ = "0.1.0"

"""
unitri - exact computation in the Lie algebra u_n of unitriangular
polynomial derivations, and verification of its truncated monomorphisms.
"""

__version__ = "0.1.0"

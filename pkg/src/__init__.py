"""
Schubert calculus on exterior algebras via the Schubert derivation
"""
__version__ = "0.1.0"

"""
Istantoni G2 deformati invarianti per SU(2)^3
Moduli principali del software
"""

__version__ = "1.0.0"

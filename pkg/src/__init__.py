"""
sausage-lab: small-time coefficients of Wiener sausage volumes and heat kernel norms
"""

__version__ = "0.1.0"

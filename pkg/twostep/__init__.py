"""
twostep: exact computations on 2-step nilpotent Lie algebras with almost complex structures
"""

__version__ = "0.1.0"

# Version of the algebra file grammar and of the JSON report schema.
FORMAT_VERSION = "1"

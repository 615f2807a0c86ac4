"""Varieties of Steenrod-algebra module structures on A(2) and B(2).

The library builds the generic degree-8 and degree-16 operators with unknown
matrix entries, collects Adem-relation residuals, eliminates variables first
linearly and then by safe substitution, and exposes the resulting varieties:
their points, the maps between them, the duality involution, and a plain-text
module-definition export for any chosen point.
"""

__version__ = "0.1.0"

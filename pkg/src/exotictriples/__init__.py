"""Exotic rational Diophantine triples.

Triples ``{a, b, c}`` of distinct nonzero rationals with ``a+1, b+1, c+1,
ab+1, ac+1, bc+1, abc+1`` all squares: an infinite family from the elliptic
curve ``y**2 = x**3 - 111*x + 450``, exact certificates, and searches.
"""

from .ecq import E1, E2, E2_GENERATOR, E2_TORSION, CurvePoint, WeierstrassCurve
from .exactnum import Rat, enumerate_rats, format_rat, height, int_sqrt, parse_rat, rat_sqrt
from .family import ExoticTriple, generate_family, param_map, to_triple
from .verify import SquareCertificate, regularity_report, verify_diophantine_with_one, verify_exotic

__all__ = [
    "E1", "E2", "E2_GENERATOR", "E2_TORSION", "CurvePoint", "WeierstrassCurve",
    "Rat", "enumerate_rats", "format_rat", "height", "int_sqrt", "parse_rat", "rat_sqrt",
    "ExoticTriple", "generate_family", "param_map", "to_triple",
    "SquareCertificate", "regularity_report", "verify_diophantine_with_one", "verify_exotic",
]

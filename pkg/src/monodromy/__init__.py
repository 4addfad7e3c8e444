"""Hurwitz orbits and liftable mapping classes for genus-one Lefschetz fibrations."""

from .braid import BraidWord, parse_word
from .certify import InfinityCertificate, auroux_divergence, certify_infinite, verify_certificate
from .coset import abelianization, cross_check_index, smith_normal_form, todd_coxeter
from .hurwitz import DISK, SPHERE, Factorization, builtin, hurwitz_move, load
from .orbit import enumerate_orbit, export_dot, fixed_point_stats
from .sl2 import ALPHA, BETA, IntMatrix2, TorusCurve, TwistPower, twist_matrix

__version__ = "0.1.0"

__all__ = [
    "ALPHA", "BETA", "DISK", "SPHERE",
    "BraidWord", "Factorization", "InfinityCertificate", "IntMatrix2", "TorusCurve", "TwistPower",
    "abelianization", "auroux_divergence", "builtin", "certify_infinite", "cross_check_index",
    "enumerate_orbit", "export_dot", "fixed_point_stats", "hurwitz_move", "load", "parse_word",
    "smith_normal_form", "todd_coxeter", "twist_matrix", "verify_certificate",
]

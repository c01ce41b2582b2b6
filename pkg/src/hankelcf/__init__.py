"""Exact Hankel continued fractions, contractions, Hankel determinants and Euler numbers."""
from .contfrac import (CFPattern, GeneralizedCF, JFraction, chop, chop_chain, contract_even,
                       contract_odd, equivalence_scale, evaluate, haircut, normalize)
from .errors import HankelCFError
from .euler import euler_numbers, q_euler
from .exact import GaussianRational, Poly, QPolynomial
from .hankel import det, hankel_det, hankel_sequence
from .hfrac import SuperFraction, classify, evaluate_super, expand, hankel_profile
from .series import TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "CFPattern", "GaussianRational", "GeneralizedCF", "HankelCFError", "JFraction", "Poly",
    "QPolynomial", "SuperFraction", "TruncatedSeries", "chop", "chop_chain", "classify",
    "contract_even", "contract_odd", "det", "equivalence_scale", "euler_numbers", "evaluate",
    "evaluate_super", "expand", "haircut", "hankel_det", "hankel_profile", "hankel_sequence",
    "normalize", "q_euler",
]

"""Registry of continued-fraction and Hankel-determinant identities, with a verifier."""
from .engine import (Report, all_ids, fraction_class_of, prefix_discrepancies, replay,
                     verify_all, verify_derivation, verify_fraction, verify_hankel, verify_id)
from .registry import DERIVATIONS, ENTRIES, Derivation, FormulaEntry, lookup, lookup_derivation
from .targets import target_sequence, target_series

__all__ = [
    "DERIVATIONS", "ENTRIES", "Derivation", "FormulaEntry", "Report", "all_ids",
    "fraction_class_of", "lookup", "lookup_derivation", "prefix_discrepancies", "replay",
    "target_sequence", "target_series", "verify_all", "verify_derivation", "verify_fraction",
    "verify_hankel", "verify_id",
]

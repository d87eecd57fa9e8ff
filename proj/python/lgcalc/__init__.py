"""Lambek-Grishin calculus engine: proof search, cut elimination and
CPS semantics over finite models."""

try:
    from ._lgcalc import check, cut, denote, proof_tree, prove, translate_type
except ImportError:  # extension on sys.path rather than inside the package
    from _lgcalc import check, cut, denote, proof_tree, prove, translate_type

__all__ = ["prove", "check", "cut", "translate_type", "proof_tree", "denote"]

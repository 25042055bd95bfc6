"""Exact rational computations with commutative differential graded algebras.

The core pipeline builds a model, computes its cohomology through a degree
bound, evaluates triple Massey products and tests s-formality of a minimal
model.  The ``topology`` module adds the cone fixtures and the Betti-number
bookkeeping for manifolds built from them.
"""

from .cdga import FreeCDGA, apply_d, cohomology, cup, is_exact, validate
from .errors import OutOfRange, PreconditionError, Refusal
from .grading import Element, GradedAlgebra, basis, multiply
from .massey import indeterminacy, triple_massey
from .modelfile import ModelSyntaxError, emit_model, parse_model
from .sullivan import (cn_decompose, formality_verdict, identity_stage, minimal_model,
                       s_formality)
from .topology import (BettiTable, boundary_les, build_Ck, build_Ckprime, connected_sum,
                       formality_shortcut, geography, s1_stabilize, transfer_massey)

__all__ = [
    "BettiTable", "boundary_les", "build_Ck", "build_Ckprime", "connected_sum",
    "formality_shortcut", "geography", "s1_stabilize", "transfer_massey",
    "Element", "FreeCDGA", "GradedAlgebra", "ModelSyntaxError", "OutOfRange",
    "PreconditionError", "Refusal", "apply_d", "basis", "cn_decompose", "cohomology",
    "cup", "emit_model", "formality_verdict", "identity_stage", "indeterminacy",
    "is_exact", "minimal_model", "multiply", "parse_model", "s_formality",
    "triple_massey", "validate",
]

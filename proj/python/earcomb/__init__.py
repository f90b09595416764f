from ._earcomb import (
    boolean_decomposition,
    certify_ball_or_sphere,
    descent_class,
    dominates,
    f_vector,
    faceposet_decomposition,
    find_shelling,
    geometric_decomposition,
    h_vector,
    is_cohen_macaulay,
    is_m_vector,
    is_two_cm,
    macaulay_pseudopower,
    nbc_bases,
    reduced_homology,
    verify_shelling,
    w_set,
    weak_leq,
)

__all__ = [
    "boolean_decomposition",
    "certify_ball_or_sphere",
    "descent_class",
    "dominates",
    "f_vector",
    "faceposet_decomposition",
    "find_shelling",
    "geometric_decomposition",
    "h_vector",
    "is_cohen_macaulay",
    "is_m_vector",
    "is_two_cm",
    "macaulay_pseudopower",
    "nbc_bases",
    "reduced_homology",
    "verify_shelling",
    "w_set",
    "weak_leq",
]

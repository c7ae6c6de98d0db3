"""Exact computations in Iwahori-Hecke algebras of type B.

Signed-permutation arithmetic for B_m, sparse T-basis multiplication over
Z[p, q], parabolic coset decompositions, good-involution combinatorics, and
a verification suite that recomputes every supported closed form from first
principles.
"""

from .combinat import (
    GoodInvolution,
    SeparatedSet,
    binomial_sum,
    count_separated,
    enumerate_good,
    enumerate_separated,
    neat_count,
    pred,
    shift_separated,
    stat_a,
    stat_c,
    stat_d,
    succ,
)
from .hecke import (
    HeckeElement,
    ParabolicDecomposition,
    distinguished_factor,
    mult,
    mult_simple_left,
    mult_simple_right,
    parabolic_decompose,
    t_of,
    trivial_quotient,
    unit,
    z_coefficient,
)
from .poly import (
    BivarPoly,
    CyclotomicModulus,
    ONE,
    P,
    Q,
    ZERO,
    cyclotomic,
    reduce_mod_cyclotomic,
    specialize,
)
from .signedperm import (
    ReducedWord,
    SignedPermutation,
    coset_membership,
    generator,
    identity,
    make_cycle,
    make_w_nk,
)
from .verify import (
    VerificationReport,
    closed_form_w0k_square,
    f_k_direct,
    f_k_recurrence,
    f_k_separated,
    hecke_parameter,
    run_suite,
)
from .words import WordExpression, evaluate_word, parse_word

__all__ = [
    "BivarPoly",
    "CyclotomicModulus",
    "GoodInvolution",
    "HeckeElement",
    "ONE",
    "P",
    "ParabolicDecomposition",
    "Q",
    "ReducedWord",
    "SeparatedSet",
    "SignedPermutation",
    "VerificationReport",
    "WordExpression",
    "ZERO",
    "binomial_sum",
    "closed_form_w0k_square",
    "coset_membership",
    "count_separated",
    "cyclotomic",
    "distinguished_factor",
    "enumerate_good",
    "enumerate_separated",
    "evaluate_word",
    "f_k_direct",
    "f_k_recurrence",
    "f_k_separated",
    "generator",
    "hecke_parameter",
    "identity",
    "make_cycle",
    "make_w_nk",
    "mult",
    "mult_simple_left",
    "mult_simple_right",
    "neat_count",
    "parabolic_decompose",
    "parse_word",
    "pred",
    "reduce_mod_cyclotomic",
    "run_suite",
    "shift_separated",
    "specialize",
    "stat_a",
    "stat_c",
    "stat_d",
    "succ",
    "t_of",
    "trivial_quotient",
    "unit",
    "z_coefficient",
]

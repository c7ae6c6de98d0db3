"""Sparse T-basis arithmetic in the Hecke algebra of B_m.

Elements are finite sums sum_w c_w T_w with c_w in Z[p, q], stored as a
mapping from window to coefficient.  The generator T_t carries parameter p,
every T_{s_i} carries q, and the defining relation is
(T_g - 1)(T_g + param(g)) = 0.

Products are computed by expanding the right factor basis element by basis
element along a reduced word and folding single-generator multiplications
into the left factor, so no multiplication tables are ever materialized.
Inverses of basis elements are never formed; coefficients stay polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import BivarPoly, ONE, _iadd_raw, _isub_raw, _mul_raw
from .signedperm import (
    SignedPermutation,
    identity,
    make_w_nk,
    parabolic_generators,
)

__all__ = [
    "HeckeElement",
    "ParabolicDecomposition",
    "t_of",
    "unit",
    "mult",
    "mult_simple_right",
    "mult_simple_left",
    "distinguished_factor",
    "parabolic_decompose",
    "trivial_quotient",
    "z_coefficient",
]


def _sort_key(w: SignedPermutation):
    return (w.length(), tuple(w))


class HeckeElement:
    """A sparse element sum_w c_w T_w of the Hecke algebra of B_rank."""

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms=None):
        clean: dict[SignedPermutation, BivarPoly] = {}
        for w, c in dict(terms or {}).items():
            if not isinstance(w, SignedPermutation):
                w = SignedPermutation(w)
            if len(w) != rank:
                raise ValueError(f"term {w} has rank {len(w)}, element has rank {rank}")
            c = c if isinstance(c, BivarPoly) else BivarPoly(c)
            if c:
                clean[w] = c
        self.rank = rank
        self._terms = clean

    @classmethod
    def _raw(cls, rank: int, terms: dict) -> "HeckeElement":
        self = object.__new__(cls)
        self.rank = rank
        self._terms = terms
        return self

    # -- module structure ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check_rank(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                del out[w]
        return HeckeElement._raw(self.rank, out)

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + other.scale(-1)

    def scale(self, c) -> "HeckeElement":
        c = c if isinstance(c, BivarPoly) else BivarPoly(c)
        if not c:
            return HeckeElement._raw(self.rank, {})
        return HeckeElement._raw(
            self.rank, {w: cw * c for w, cw in self._terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mult(self, other)
        if isinstance(other, (BivarPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (BivarPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __bool__(self):
        return bool(self._terms)

    def _check_rank(self, other):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    # -- queries ----------------------------------------------------------------

    def support(self):
        return self._terms.keys()

    def coefficient(self, w) -> BivarPoly:
        if not isinstance(w, SignedPermutation):
            w = SignedPermutation(w)
        return self._terms.get(w, BivarPoly(0))

    def sorted_terms(self):
        """Terms (w, coeff) ordered by length(w), then lexicographic window."""
        return sorted(self._terms.items(), key=lambda wc: _sort_key(wc[0]))

    def map_coefficients(self, fn) -> "HeckeElement":
        out = {}
        for w, c in self._terms.items():
            nc = fn(c)
            if nc:
                out[w] = nc
        return HeckeElement._raw(self.rank, out)

    def specialize(self, p_val: int, q_val: int) -> dict[SignedPermutation, int]:
        """Evaluate every coefficient at integer parameters; drops zeros."""
        out = {}
        for w, c in self._terms.items():
            v = c.specialize(p_val, q_val)
            if v:
                out[w] = v
        return out

    # -- formatting ----------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*T{w}" for w, c in self.sorted_terms())

    def __repr__(self):
        return f"HeckeElement(rank={self.rank}, {len(self._terms)} terms)"

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [
                {"w": list(w), "coeff": c.to_json()} for w, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "HeckeElement":
        terms = {
            SignedPermutation(t["w"]): BivarPoly.from_json(t["coeff"])
            for t in data["terms"]
        }
        return cls(int(data["rank"]), terms)


def unit(rank: int) -> HeckeElement:
    return HeckeElement._raw(rank, {identity(rank): ONE})


def t_of(w: SignedPermutation) -> HeckeElement:
    """The basis element T_w."""
    if not isinstance(w, SignedPermutation):
        w = SignedPermutation(w)
    return HeckeElement._raw(len(w), {w: ONE})


# -- single-generator multiplication kernel ------------------------------------

def _fold_right(terms: dict, g: int) -> dict:
    """Right-multiply a raw {window: coeff-dict} mapping by T_g.

    Length-increasing terms move; the rest split by the quadratic relation
    T_w T_g = param*T_{wg} + (1-param)*T_w with param p (g = 0) or q.
    """
    dp, dq = (1, 0) if g == 0 else (0, 1)
    out: dict = {}
    for w, c in terms.items():
        ws = w.apply_right(g)
        if not w.right_descent(g):
            tgt = out.get(ws)
            if tgt is None:
                out[ws] = dict(c)
            else:
                _iadd_raw(tgt, c)
                if not tgt:
                    del out[ws]
        else:
            shifted = {(pe + dp, qe + dq): v for (pe, qe), v in c.items()}
            tgt = out.get(ws)
            if tgt is None:
                out[ws] = dict(shifted)
            else:
                _iadd_raw(tgt, shifted)
                if not tgt:
                    del out[ws]
            tgt = out.get(w)
            if tgt is None:
                rem = dict(c)
                _isub_raw(rem, shifted)
                if rem:
                    out[w] = rem
            else:
                _iadd_raw(tgt, c)
                _isub_raw(tgt, shifted)
                if not tgt:
                    del out[w]
    return out


def mult_simple_right(h: HeckeElement, g: int) -> HeckeElement:
    """h * T_g for a single generator index g."""
    if not 0 <= g < h.rank:
        raise ValueError(f"generator index {g} invalid for rank {h.rank}")
    raw = {w: dict(c._terms) for w, c in h._terms.items()}
    return _wrap_raw(h.rank, _fold_right(raw, g))


def mult_simple_left(g: int, h: HeckeElement) -> HeckeElement:
    """T_g * h, mirroring mult_simple_right with left lengths."""
    if not 0 <= g < h.rank:
        raise ValueError(f"generator index {g} invalid for rank {h.rank}")
    param = BivarPoly.monomial(1, 1, 0) if g == 0 else BivarPoly.monomial(1, 0, 1)
    one_minus = ONE - param
    out: dict = {}

    def add(w, c):
        s = out.get(w)
        s = c if s is None else s + c
        if s:
            out[w] = s
        else:
            del out[w]

    for w, c in h._terms.items():
        sw = w.apply_left(g)
        if not w.left_descent(g):
            add(sw, c)
        else:
            add(sw, c * param)
            add(w, c * one_minus)
    return HeckeElement._raw(h.rank, out)


def _wrap_raw(rank: int, raw: dict) -> HeckeElement:
    return HeckeElement._raw(
        rank, {w: BivarPoly._raw(c) for w, c in raw.items() if c}
    )


def mult(h1: HeckeElement, h2: HeckeElement) -> HeckeElement:
    """Product in the Hecke algebra.

    Expands each basis element of h2 along a reduced word and folds the
    generators into h1; well-definedness over the choice of word is a
    consequence of the braid relations (and is exercised by the tests).
    """
    h1._check_rank(h2)
    acc: dict = {}
    for w2, c2 in h2._terms.items():
        raw2 = c2._terms
        cur = {w1: _mul_raw(c1._terms, raw2) for w1, c1 in h1._terms.items()}
        for g in w2.reduced_word().letters:
            cur = _fold_right(cur, g)
        for w, c in cur.items():
            tgt = acc.get(w)
            if tgt is None:
                acc[w] = c
            else:
                _iadd_raw(tgt, c)
                if not tgt:
                    del acc[w]
    return _wrap_raw(h1.rank, acc)


# -- parabolic coset machinery ----------------------------------------------------

def distinguished_factor(
    w: SignedPermutation, n: int, k: int
) -> tuple[SignedPermutation, SignedPermutation]:
    """Factor w = w' * x with w' in B_n x S_k and x the minimal coset representative.

    Strips left descents of x lying in the parabolic generator set; each strip
    moves one letter onto w', so length(w) = length(w') + length(x) holds by
    construction.
    """
    if len(w) != n + k:
        raise ValueError(f"rank mismatch: {len(w)} vs n + k = {n + k}")
    gens = parabolic_generators(n, k)
    x = w
    wprime = identity(n + k)
    while True:
        for g in gens:
            if x.left_descent(g):
                x = x.apply_left(g)
                wprime = wprime.apply_right(g)
                break
        else:
            break
    return wprime, x


def is_distinguished(x: SignedPermutation, n: int, k: int) -> bool:
    """True iff x is the minimal-length element of its coset (B_n x S_k) x."""
    if len(x) != n + k:
        raise ValueError(f"rank mismatch: {len(x)} vs n + k = {n + k}")
    return not any(x.left_descent(g) for g in parabolic_generators(n, k))


@dataclass(frozen=True)
class ParabolicDecomposition:
    """A Hecke element regrouped as sum_x (component_x) * T_x over coset representatives.

    Components are supported on the parabolic subgroup B_n x S_k; keys are
    checked to be distinguished representatives on construction.
    """

    n: int
    k: int
    components: dict[SignedPermutation, HeckeElement]

    def __post_init__(self):
        for x in self.components:
            if not is_distinguished(x, self.n, self.k):
                raise ValueError(f"{x} is not a distinguished representative")

    @property
    def rank(self) -> int:
        return self.n + self.k

    def reassemble(self) -> HeckeElement:
        total = HeckeElement._raw(self.rank, {})
        for x, comp in sorted(
            self.components.items(), key=lambda it: _sort_key(it[0])
        ):
            total = total + mult(comp, t_of(x))
        return total


def parabolic_decompose(h: HeckeElement, n: int, k: int) -> ParabolicDecomposition:
    """Group the terms of h by their distinguished factorization."""
    if h.rank != n + k:
        raise ValueError(f"rank mismatch: {h.rank} vs n + k = {n + k}")
    buckets: dict[SignedPermutation, dict] = {}
    for w, c in h._terms.items():
        wprime, x = distinguished_factor(w, n, k)
        buckets.setdefault(x, {})[wprime] = c
    return ParabolicDecomposition(
        n, k, {x: HeckeElement._raw(h.rank, terms) for x, terms in buckets.items()}
    )


def trivial_quotient(h: HeckeElement, n: int, k: int) -> HeckeElement:
    """Image of an element supported on B_n x S_k under T_{uv} -> T_u.

    Every support element must factor as u * v with u in B_n and v in S_k
    (the factors commute); the S_k part acts through the trivial character,
    leaving an element of the Hecke algebra of B_n.
    """
    if h.rank != n + k:
        raise ValueError(f"rank mismatch: {h.rank} vs n + k = {n + k}")
    out: dict[SignedPermutation, BivarPoly] = {}
    for w, c in h._terms.items():
        if any(abs(w[i]) > n for i in range(n)) or any(
            w[i] <= n for i in range(n, n + k)
        ):
            raise ValueError(f"support element {w} is not in B_{n} x S_{k}")
        u = SignedPermutation(w[:n], check=False)
        s = out.get(u)
        s = c if s is None else s + c
        if s:
            out[u] = s
        else:
            del out[u]
    return HeckeElement._raw(n, out)


def z_coefficient(n: int, k: int) -> HeckeElement:
    """The coefficient of T_{w_{n,k}} in the coset decomposition of T_{w_{n,k}}^2.

    Returned as an element of the ambient algebra supported on B_n x S_k.
    """
    w = make_w_nk(n, k)
    square = mult(t_of(w), t_of(w))
    dec = parabolic_decompose(square, n, k)
    return dec.components.get(w, HeckeElement._raw(n + k, {}))

"""Good involutions of B_k, their statistics, and separated k-sets.

A good involution fixes each positive index or sends it to a negative value.
The set G_k of good involutions carries three statistics: a(w) counts fixed
points among 1..k, d(i, w) counts fixed points strictly above i, and c(w)
counts the unordered "tidy" pairs {i, j} with -w(i) < j and -w(j) < i.

G_{k+1} is produced from G_k by conjugating with x = t s_1 ... s_k (or with
x missing one letter), which realizes the successor/predecessor recursion.

Separated k-sets are the subsets of {0, ..., k-1} whose pairwise differences
lie strictly between 1 and k-1; they index a closed form for the polynomials
f_k computed in the verifier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .signedperm import SignedPermutation, generator, identity

__all__ = [
    "GoodInvolution",
    "SeparatedSet",
    "enumerate_good",
    "good_involutions_filter",
    "stat_a",
    "stat_d",
    "stat_c",
    "neat_count",
    "symmetric_involutions",
    "conjugator",
    "conjugator_omit",
    "succ",
    "pred",
    "enumerate_separated",
    "count_separated",
    "shift_separated",
    "binomial_sum",
]


def stat_a(w: SignedPermutation) -> int:
    """Number of fixed points of w among 1..rank."""
    return sum(1 for i, v in enumerate(w, start=1) if v == i)


def stat_d(i: int, w: SignedPermutation) -> int:
    """Number of fixed points of w strictly above position i (0 <= i <= rank)."""
    if not 0 <= i <= len(w):
        raise ValueError(f"i = {i} out of range for rank {len(w)}")
    return sum(1 for j in range(i + 1, len(w) + 1) if w[j - 1] == j)


def stat_c(w: SignedPermutation) -> int:
    """Number of tidy pairs {i, j}: -w(i) < j and -w(j) < i."""
    count = 0
    for i in range(1, len(w) + 1):
        for j in range(i + 1, len(w) + 1):
            if -w[i - 1] < j and -w[j - 1] < i:
                count += 1
    return count


def neat_count(w: SignedPermutation) -> int:
    """Number of neat pairs {i, j} of an involution in S_k: w(j) < i and w(i) < j.

    A pair is neat in w exactly when it is tidy in -w.
    """
    if any(v < 0 for v in w):
        raise ValueError(f"{w} is not in the symmetric group")
    if not w.is_involution():
        raise ValueError(f"{w} is not an involution")
    return stat_c(w.negate())


@dataclass(frozen=True)
class GoodInvolution:
    """An involution of B_k fixing each index or sending it negative."""

    perm: SignedPermutation

    def __post_init__(self):
        w = self.perm
        if not w.is_involution():
            raise ValueError(f"{w} is not an involution")
        for i, v in enumerate(w, start=1):
            if v != i and v > 0:
                raise ValueError(f"{w} sends {i} to the positive non-fixed value {v}")

    @property
    def rank(self) -> int:
        return len(self.perm)

    @property
    def a(self) -> int:
        return stat_a(self.perm)

    @property
    def a_neg(self) -> int:
        """Fixed points of -w, i.e. indices with w(i) = -i."""
        return stat_a(self.perm.negate())

    @property
    def c(self) -> int:
        return stat_c(self.perm)

    def d(self, i: int) -> int:
        return stat_d(i, self.perm)

    def embed(self, rank: int) -> "GoodInvolution":
        return GoodInvolution(self.perm.embed(rank))

    def __str__(self):
        return str(self.perm)


def _involutions_of(points: tuple[int, ...]):
    """All involutions of a finite set of points, as {point: image} dicts."""
    if not points:
        yield {}
        return
    first, rest = points[0], points[1:]
    for sub in _involutions_of(rest):
        yield {first: first, **sub}
    for idx, partner in enumerate(rest):
        others = rest[:idx] + rest[idx + 1:]
        for sub in _involutions_of(others):
            yield {first: partner, partner: first, **sub}


def symmetric_involutions(k: int) -> list[SignedPermutation]:
    """All involutions of S_k, as sign-positive rank-k windows."""
    points = tuple(range(1, k + 1))
    out = []
    for pairing in _involutions_of(points):
        out.append(SignedPermutation((pairing[i] for i in points), check=False))
    out.sort()
    return out


def enumerate_good(k: int) -> list[GoodInvolution]:
    """All of G_k, generated directly: choose the fixed set, then pair up and
    negate the rest.  Sorted by window."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    points = tuple(range(1, k + 1))
    out = []
    for mask in range(1 << k):
        fixed = {points[i] for i in range(k) if mask >> i & 1}
        moved = tuple(p for p in points if p not in fixed)
        for pairing in _involutions_of(moved):
            window = [i if i in fixed else -pairing[i] for i in points]
            out.append(GoodInvolution(SignedPermutation(window, check=False)))
    out.sort(key=lambda g: g.perm)
    return out


def good_involutions_filter(k: int) -> list[GoodInvolution]:
    """Oracle: G_k by exhaustive filtering of all 2^k k! elements of B_k."""
    from .signedperm import all_elements

    out = []
    for w in all_elements(k):
        if all(v == i or v < 0 for i, v in enumerate(w, start=1)) and w.is_involution():
            out.append(GoodInvolution(w))
    out.sort(key=lambda g: g.perm)
    return out


# -- successor/predecessor recursion -------------------------------------------

def conjugator(k: int) -> SignedPermutation:
    """The element x = t s_1 ... s_k of B_{k+1} driving the rank-raising conjugation."""
    w = generator(0, k + 1)
    for i in range(1, k + 1):
        w = w.apply_right(i)
    return w


def conjugator_omit(i: int, k: int) -> SignedPermutation:
    """x with the letter s_i left out: t s_1 ... s_{i-1} s_{i+1} ... s_k."""
    if not 1 <= i <= k:
        raise ValueError(f"i = {i} out of range 1..{k}")
    w = generator(0, k + 1)
    for j in range(1, k + 1):
        if j != i:
            w = w.apply_right(j)
    return w


def succ(g: GoodInvolution) -> list[GoodInvolution]:
    """The 2 + a(w) successors of w in G_{k+1}, sorted by window."""
    k = g.rank
    x = conjugator(k)
    x_inv = x.inverse()
    w1 = g.perm.embed(k + 1)
    base = x * w1 * x_inv
    out = [GoodInvolution(base), GoodInvolution(base * generator(0, k + 1))]
    for i in range(1, k + 1):
        if g.perm[i - 1] == i:
            out.append(GoodInvolution(x * w1 * conjugator_omit(i, k).inverse()))
    out.sort(key=lambda s: s.perm)
    return out


def pred(g: GoodInvolution) -> GoodInvolution:
    """The unique element of G_k whose successor set contains g in G_{k+1}.

    The case split is on g(1): fixed, negated, or sent to -(i+1).
    """
    kp1 = g.rank
    if kp1 < 1:
        raise ValueError("rank-0 element has no predecessor")
    k = kp1 - 1
    x = conjugator(k)
    v = g.perm[0]
    if v == 1:
        result = x.inverse() * g.perm * x
    elif v == -1:
        result = x.inverse() * (g.perm * generator(0, kp1)) * x
    else:
        i = -v - 1
        if not 1 <= i <= k:
            raise ValueError(f"invalid first entry {v} for a good involution")
        result = x.inverse() * g.perm * conjugator_omit(i, k)
    return GoodInvolution(result.restrict(k))


# -- separated sets ---------------------------------------------------------------

@dataclass(frozen=True)
class SeparatedSet:
    """A subset of {0..k-1} with pairwise differences strictly between 1 and k-1."""

    k: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        ms = self.members
        if list(ms) != sorted(set(ms)):
            raise ValueError("members must be strictly increasing")
        if ms and not (0 <= ms[0] and ms[-1] < self.k):
            raise ValueError(f"members out of range 0..{self.k - 1}")
        for a in ms:
            for b in ms:
                if a < b and not 1 < b - a < self.k - 1:
                    raise ValueError(f"{{{a}, {b}}} violates separation for k = {self.k}")

    def __len__(self):
        return len(self.members)

    def __str__(self):
        return "{" + ",".join(str(v) for v in self.members) + "}"


def enumerate_separated(k: int) -> list[SeparatedSet]:
    """All separated k-sets, by backtracking; sorted by (size, members)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = [SeparatedSet(k, ())]

    def extend(chosen: tuple[int, ...], nxt: int):
        for v in range(nxt, k):
            if any(not 1 < v - u < k - 1 for u in chosen):
                continue
            cur = chosen + (v,)
            out.append(SeparatedSet(k, cur))
            extend(cur, v + 2)

    extend((), 0)
    out.sort(key=lambda s: (len(s.members), s.members))
    return out


def _binom(n: int, t: int) -> int:
    """Binomial coefficient with C(n, 0) = 1 for every n and 0 otherwise
    outside 0 <= t <= n."""
    if t == 0:
        return 1
    if t < 0 or n < 0 or t > n:
        return 0
    return math.comb(n, t)


def count_separated(k: int, i: int) -> int:
    """Closed form for the number of separated k-sets of cardinality i."""
    if k < 1 or i < 0:
        raise ValueError("need k >= 1 and i >= 0")
    return _binom(k - i, i) + _binom(k - i - 1, i - 1)


def shift_separated(s: SeparatedSet, r: int) -> SeparatedSet:
    """Cyclic shift of every member by r modulo k; a bijection of Sep_k."""
    members = tuple(sorted((v + r) % s.k for v in s.members))
    return SeparatedSet(s.k, members)


def binomial_sum(k: int, i: int) -> int:
    """The alternating sum sum_j (-1)^j C(k-2j, i-j) C(k-j, j).

    Each product is the trinomial coefficient (k-j)! / (j! (i-j)! (k-i-j)!),
    vanishing whenever a lower index is negative.
    """
    if not 0 <= i <= k:
        raise ValueError(f"need 0 <= i <= k, got i = {i}, k = {k}")
    total = 0
    for j in range(i + 1):
        term = _binom(k - 2 * j, i - j) * _binom(k - j, j)
        total += -term if j & 1 else term
    return total

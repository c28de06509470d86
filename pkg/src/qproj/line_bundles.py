"""Line bundle classes over quantum projective spaces.

The degree-k line bundle over the quantum projective n-space, viewed as
a finitely generated projective module, decomposes into the standard
projection stock.  Non-positive degrees are a single corner projection:
the identity with the first |k| basis states of the first tensor axis
removed (|k| = 0 meaning the identity itself).  Positive degrees spread
out over all levels with binomial multiplicities:

    mult[j] = C(k + j - 1, j)   for levels j = 0..n.

The closed form is reproduced independently by a peeling recursion that
strips one unit of degree at a time:

    (k, j)  ->  (0, j)  +  sum over l = 1..k of (l, j + 1)

with every stratum at the deepest level collapsing to a single terminal
class.  The tail sums that make the two agree are hockey-stick binomial
identities, checked exactly by ``hockey_stick``.

>>> closed_form(2, 2).mult
(1, 2, 3)
>>> recursion_expand(2, 2) == closed_form(2, 2)
True
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

from .errors import InvalidClass, OutOfRange, UnsupportedDegree
from .k_theory import K0Vector

__all__ = [
    "binomial",
    "BundleDescriptor",
    "LineBundleDecomposition",
    "closed_form",
    "recursion_expand",
    "hockey_stick",
    "HockeyStickResult",
    "k0_class",
]


def binomial(k, j):
    """Exact binomial coefficient C(k, j) = k! / (j! (k-j)!), arbitrary size."""
    if isinstance(k, bool) or not isinstance(k, int):
        raise OutOfRange(f"binomial needs integers, got {k!r}")
    if isinstance(j, bool) or not isinstance(j, int):
        raise OutOfRange(f"binomial needs integers, got {j!r}")
    if j < 0 or j > k:
        raise OutOfRange(f"binomial index j={j} outside 0..{k}")
    return math.comb(k, j)


@dataclass(frozen=True)
class BundleDescriptor:
    """A line bundle named by ambient index n >= 1 and degree k."""

    n: int
    k: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise InvalidClass(f"ambient index must be an integer >= 1, got {self.n!r}")
        if isinstance(self.k, bool) or not isinstance(self.k, int):
            raise InvalidClass(f"degree must be an integer, got {self.k!r}")

    def closed_form(self):
        return closed_form(self.n, self.k)

    def recursion_expand(self):
        return recursion_expand(self.n, self.k)

    def k0_class(self):
        return k0_class(self.n, self.k)


@dataclass(frozen=True)
class LineBundleDecomposition:
    """Decomposition of a line bundle into the projection stock.

    Either a single corner projection (kind "corner", with depth m >= 0,
    m = 0 meaning the identity) or a multiset of level classes (kind
    "multiset", with one multiplicity per level 0..n).
    """

    n: int
    k: int
    kind: str
    m: Optional[int] = None
    mult: Optional[tuple] = None

    def __post_init__(self):
        if self.kind == "corner":
            if self.m is None or self.mult is not None:
                raise InvalidClass("corner decompositions carry a depth m only")
            if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 0:
                raise InvalidClass(f"corner depth must be an integer >= 0, got {self.m!r}")
        elif self.kind == "multiset":
            if self.mult is None or self.m is not None:
                raise InvalidClass("multiset decompositions carry multiplicities only")
            if len(self.mult) != self.n + 1:
                raise InvalidClass(
                    f"need {self.n + 1} multiplicities over n={self.n}, "
                    f"got {len(self.mult)}"
                )
            for c in self.mult:
                if isinstance(c, bool) or not isinstance(c, int) or c < 0:
                    raise InvalidClass(f"multiplicities are integers >= 0, got {c!r}")
        else:
            raise InvalidClass(f"unknown decomposition kind {self.kind!r}")

    @classmethod
    def corner(cls, n, k, m):
        return cls(n=n, k=k, kind="corner", m=m)

    @classmethod
    def multiset(cls, n, k, mult):
        return cls(n=n, k=k, kind="multiset", mult=tuple(mult))

    def total_classes(self):
        """Number of elementary summands in the decomposition."""
        return 1 if self.kind == "corner" else sum(self.mult)

    def to_json(self):
        record = {"n": self.n, "k": self.k, "kind": self.kind}
        if self.kind == "corner":
            record["m"] = self.m
        else:
            record["mult"] = list(self.mult)
        return record

    @classmethod
    def from_json(cls, obj):
        try:
            if obj["kind"] == "corner":
                return cls.corner(obj["n"], obj["k"], obj["m"])
            return cls.multiset(obj["n"], obj["k"], obj["mult"])
        except (KeyError, TypeError) as exc:
            raise InvalidClass(f"malformed decomposition record: {obj!r}") from exc


def _check_bundle_args(n, k):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise OutOfRange(f"ambient index must be an integer >= 1, got {n!r}")
    if isinstance(k, bool) or not isinstance(k, int):
        raise OutOfRange(f"degree must be an integer, got {k!r}")


def closed_form(n, k):
    """Decomposition of the degree-k bundle over the projective n-space.

    Degrees k <= 0 give the corner projection of depth |k|; positive
    degrees give the binomial multiset.
    """
    _check_bundle_args(n, k)
    if k <= 0:
        return LineBundleDecomposition.corner(n, k, -k)
    mult = tuple(binomial(k + j - 1, j) for j in range(n + 1))
    return LineBundleDecomposition.multiset(n, k, mult)


@lru_cache(maxsize=None)
def _terminal_counts(n, k, j):
    """Multiplicity vector of terminal classes reached from stratum (k, j).

    Memoized on (n, k, j); the cache is only ever written with the value
    it would recompute, so concurrent readers are safe.
    """
    if k == 0:
        return tuple(1 if i == j else 0 for i in range(n + 1))
    if j == n:
        # the deepest level collapses in a single terminal step
        return tuple(1 if i == n else 0 for i in range(n + 1))
    total = list(_terminal_counts(n, 0, j))
    for l in range(1, k + 1):
        for i, c in enumerate(_terminal_counts(n, l, j + 1)):
            total[i] += c
    return tuple(total)


def recursion_expand(n, k):
    """Expand the degree-k bundle by repeated peeling; k >= 1 required.

    Agrees with the binomial closed form; the agreement is exactly the
    family of hockey-stick identities.
    """
    _check_bundle_args(n, k)
    if k < 1:
        raise OutOfRange(f"the peeling recursion starts at degree >= 1, got {k}")
    return LineBundleDecomposition.multiset(n, k, _terminal_counts(n, k, 0))


class HockeyStickResult(NamedTuple):
    lhs: int
    rhs: int
    equal: bool


def hockey_stick(l, k):
    """Exact check of the tail-sum binomial identity and all its shifts.

    The base identity is

        sum over m = 1..k of C(k - m + l - 2, l - 2)  ==  C(k + l - 2, l - 1)

    and for every starting point 1 <= i <= k the shifted tail satisfies

        sum over m = i..k of C(k - m + l - 2, l - 2)  ==  C(k - i + l - 1, l - 1).

    Returns the base (lhs, rhs) and whether base and all shifts hold.

    >>> hockey_stick(3, 4)
    HockeyStickResult(lhs=10, rhs=10, equal=True)
    """
    if isinstance(l, bool) or not isinstance(l, int) or l < 2:
        raise OutOfRange(f"the identity needs l >= 2, got {l!r}")
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise OutOfRange(f"the identity needs k >= 1, got {k!r}")
    lhs = sum(binomial(k - m + l - 2, l - 2) for m in range(1, k + 1))
    rhs = binomial(k + l - 2, l - 1)
    equal = lhs == rhs
    for i in range(1, k + 1):
        tail = sum(binomial(k - m + l - 2, l - 2) for m in range(i, k + 1))
        if tail != binomial(k - i + l - 1, l - 1):
            equal = False
            break
    return HockeyStickResult(lhs, rhs, equal)


def k0_class(n, k):
    """Even K-class of the degree-k bundle in the level basis.

    Positive degrees use the binomial multiset; degree 0 is the identity;
    degree -1 is the alternating corner class.  Deeper negative degrees
    involve composite corner projections with no expansion in the level
    basis here, so they are rejected.
    """
    _check_bundle_args(n, k)
    if k <= -2:
        raise UnsupportedDegree(
            f"no level-basis expansion is provided for degree {k} <= -2"
        )
    if k == 0:
        return K0Vector(n, (1,) + (0,) * n)
    if k == -1:
        return K0Vector(n, (1, -1) + (0,) * (n - 1))
    return K0Vector(n, tuple(binomial(k + j - 1, j) for j in range(n + 1)))

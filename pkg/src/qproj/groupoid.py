"""Windowed verification desk for the path groupoid behind the sphere algebras.

Elements carry a degree z in Z, an offset vector x in Z^n, and a source
point w in the closed positive cone: n entries, each a non-negative
integer or inf, with everything after the first inf collapsed to inf
(the canonical form).  The target is x + w.  Membership forces the
offsets at and after the first infinite position: there

    x[p] = -z - (x[0] + ... + x[p-1]),    x[p+1] = ... = x[n-1] = 0,

and every finite coordinate of the target must stay non-negative.
Composition matches source to target and adds degrees and offsets.

Two variant element kinds appear as codomains of structural bijections.
The "primed" kind (image of the degree-shear gamma_iso) forces instead

    w[0] = inf  =>  z = 0 and x[1] = ... = x[n-1] = 0,
    w[p] = inf, p >= 1  =>  x[p] = -z - (x[1] + ... + x[p-1]), rest 0,

and the degree-free kind (image of t_iso on the degree-zero part) drops
z and keeps the plain rule with z = 0.

Four stratum bijections drive the line-bundle recursion: theta_neg
trades a non-positive degree for depth in the first source coordinate;
theta_shift removes k units of degree against a source coordinate that
has at least k to give; theta_peel pays out only part of the degree and
pins the coordinate to zero; theta_terminal forgets the degree once
every source coordinate is pinned.  All four preserve the target.

Verification enumerates windowed strata exhaustively.  The bulk of any
window is its all-finite part, a product of per-coordinate choices, so
the engine materializes windows as packed integer arrays with numpy and
compares sorted key arrays; infinity travels as a reserved code inside
these private arrays only, never in element objects.  A plain
element-level enumerator with identical semantics backs the fast path
as an oracle in the tests.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (
    DegreeNonZero,
    InvalidClass,
    NotComposable,
    NotInGroupoid,
    OutOfRange,
    WrongStratum,
)
from .extnat import INF, ext_from_json, ext_to_json, is_finite
from .reports import VerifyReport

__all__ = [
    "GroupoidElement",
    "TElement",
    "Window",
    "canonicalize",
    "source",
    "target",
    "degree",
    "compose",
    "gamma_iso",
    "t_iso",
    "theta_neg",
    "theta_shift",
    "theta_peel",
    "theta_terminal",
    "enumerate_stratum",
    "verify_partition",
    "verify_bijection",
    "windowed_terminal_counts",
    "verify_terminal_counts",
    "MAP_IDS",
]


def _as_int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidClass(f"{what} must be an integer, got {value!r}")
    return value


def _collapse(w):
    """Propagate the first inf rightwards; reject negative finite entries."""
    out = []
    seen_inf = False
    for entry in w:
        if seen_inf:
            out.append(INF)
            continue
        if not is_finite(entry):
            seen_inf = True
            out.append(INF)
            continue
        entry = _as_int(entry, "source coordinate")
        if entry < 0:
            raise NotInGroupoid(f"source coordinates are >= 0 or inf, got {entry}")
        out.append(entry)
    return tuple(out)


def _first_inf(w):
    for i, entry in enumerate(w):
        if not is_finite(entry):
            return i
    return len(w)


def _validate_member(n, z, x, w, primed):
    """Membership of a canonical triple; raises NotInGroupoid on failure."""
    p = _first_inf(w)
    if primed:
        if p == 0:
            if z != 0:
                raise NotInGroupoid("an everywhere-infinite source forces degree 0")
            if any(x[1:]):
                raise NotInGroupoid("offsets past the first coordinate must vanish")
        elif p < n:
            if x[p] != -z - sum(x[1:p]):
                raise NotInGroupoid(
                    f"offset {p} must close the degree: expected {-z - sum(x[1:p])}"
                )
            if any(x[p + 1:]):
                raise NotInGroupoid("offsets past the first infinite coordinate must vanish")
    else:
        if p < n:
            if x[p] != -z - sum(x[:p]):
                raise NotInGroupoid(
                    f"offset {p} must close the degree: expected {-z - sum(x[:p])}"
                )
            if any(x[p + 1:]):
                raise NotInGroupoid("offsets past the first infinite coordinate must vanish")
    for i in range(p):
        if x[i] + w[i] < 0:
            raise NotInGroupoid(
                f"target coordinate {i} leaves the positive cone: {x[i]} + {w[i]} < 0"
            )


@dataclass(frozen=True)
class GroupoidElement:
    """A canonical groupoid element; build through ``canonicalize``.

    Direct construction re-validates, so no invalid element can exist.
    """

    n: int
    z: int
    x: tuple
    w: tuple
    primed: bool = False

    def __post_init__(self):
        n = _as_int(self.n, "coordinate count")
        if n < 1:
            raise InvalidClass(f"coordinate count must be >= 1, got {n}")
        z = _as_int(self.z, "degree")
        x = tuple(_as_int(v, "offset") for v in self.x)
        w = tuple(self.w)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "w", w)
        if len(x) != n or len(w) != n:
            raise InvalidClass(f"need {n} offsets and {n} source coordinates")
        for entry in w:
            if is_finite(entry):
                _as_int(entry, "source coordinate")
                if entry < 0:
                    raise NotInGroupoid(f"source coordinates are >= 0 or inf, got {entry}")
        if w != _collapse(w):
            raise NotInGroupoid("source is not in canonical form; use canonicalize")
        _validate_member(n, z, x, w, self.primed)

    def source(self):
        return self.w

    def target(self):
        return tuple(xv + wv for xv, wv in zip(self.x, self.w))

    def __str__(self):
        tag = "'" if self.primed else ""
        return f"({self.z}, {self.x}, {self.w}){tag}"

    def to_json(self):
        record = {
            "z": self.z,
            "x": list(self.x),
            "w": [ext_to_json(v) for v in self.w],
        }
        if self.primed:
            record["primed"] = True
        return record

    @classmethod
    def from_json(cls, obj):
        return canonicalize(
            len(obj["x"]),
            obj["z"],
            tuple(obj["x"]),
            tuple(ext_from_json(v) for v in obj["w"]),
            primed=bool(obj.get("primed", False)),
        )


@dataclass(frozen=True)
class TElement:
    """A degree-free element: the plain membership rule at degree zero."""

    n: int
    x: tuple
    w: tuple

    def __post_init__(self):
        probe = GroupoidElement(self.n, 0, self.x, self.w)
        object.__setattr__(self, "x", probe.x)
        object.__setattr__(self, "w", probe.w)

    def source(self):
        return self.w

    def target(self):
        return tuple(xv + wv for xv, wv in zip(self.x, self.w))

    def to_json(self):
        return {"x": list(self.x), "w": [ext_to_json(v) for v in self.w]}


def canonicalize(n, z, x, w, primed=False):
    """Collapse the source tail after its first inf, then validate membership.

    >>> canonicalize(2, 0, (1, -1), (0, INF)).w
    (0, inf)
    """
    w = _collapse(w)
    return GroupoidElement(n=n, z=z, x=tuple(x), w=w, primed=primed)


def source(g):
    return g.source()


def target(g):
    return g.target()


def degree(g):
    return g.z


def compose(g, h):
    """Compose two arrows: needs source(g) = target(h); degrees and offsets add."""
    if not isinstance(g, GroupoidElement) or not isinstance(h, GroupoidElement):
        raise NotComposable("compose needs two groupoid elements")
    if g.n != h.n or g.primed != h.primed:
        raise NotComposable("elements live in different groupoids")
    if g.source() != h.target():
        raise NotComposable(
            f"source {g.source()} does not match target {h.target()}"
        )
    return GroupoidElement(
        n=g.n,
        z=g.z + h.z,
        x=tuple(a + b for a, b in zip(g.x, h.x)),
        w=h.w,
        primed=g.primed,
    )


def gamma_iso(g):
    """Shear the degree by the first offset; lands in the primed groupoid."""
    if not isinstance(g, GroupoidElement) or g.primed:
        raise InvalidClass("gamma_iso is defined on plain elements")
    return GroupoidElement(n=g.n, z=g.z + g.x[0], x=g.x, w=g.w, primed=True)


def gamma_iso_inv(g):
    """Inverse shear, from the primed groupoid back to the plain one."""
    if not isinstance(g, GroupoidElement) or not g.primed:
        raise InvalidClass("gamma_iso_inv is defined on primed elements")
    return GroupoidElement(n=g.n, z=g.z - g.x[0], x=g.x, w=g.w, primed=False)


def t_iso(g):
    """Forget the degree on the degree-zero part."""
    if not isinstance(g, GroupoidElement) or g.primed:
        raise InvalidClass("t_iso is defined on plain elements")
    if g.z != 0:
        raise DegreeNonZero(f"t_iso needs degree 0, got {g.z}")
    return TElement(n=g.n, x=g.x, w=g.w)


def _w_shift(entry, t):
    return entry if not is_finite(entry) else entry + t


def theta_neg(g, k):
    """Trade non-positive degree k for depth in the first source coordinate."""
    k = _as_int(k, "degree")
    if k > 0:
        raise WrongStratum(f"theta_neg handles degrees <= 0, got {k}")
    if not isinstance(g, GroupoidElement) or g.primed:
        raise WrongStratum("theta_neg is defined on plain elements")
    if g.z != k:
        raise WrongStratum(f"element has degree {g.z}, expected {k}")
    x = (g.x[0] + k,) + g.x[1:]
    w = (_w_shift(g.w[0], -k),) + g.w[1:]
    return GroupoidElement(n=g.n, z=0, x=x, w=w)


def theta_shift(g, k, j):
    """Remove all k units of degree against source coordinate j."""
    k = _as_int(k, "degree")
    j = _as_int(j, "level")
    if not isinstance(g, GroupoidElement) or g.primed:
        raise WrongStratum("theta_shift is defined on plain elements")
    if k < 1:
        raise WrongStratum(f"theta_shift handles degrees >= 1, got {k}")
    if not 0 <= j <= g.n - 1:
        raise WrongStratum(f"level j={j} outside 0..{g.n - 1}")
    if g.z != k:
        raise WrongStratum(f"element has degree {g.z}, expected {k}")
    if any(g.w[:j]):
        raise WrongStratum(f"the first {j} source coordinates must be 0")
    if not g.w[j] >= k:
        raise WrongStratum(f"source coordinate {j} must be >= {k}, got {g.w[j]}")
    x = g.x[:j] + (g.x[j] + k,) + g.x[j + 1:]
    w = g.w[:j] + (_w_shift(g.w[j], -k),) + g.w[j + 1:]
    return GroupoidElement(n=g.n, z=0, x=x, w=w)


def theta_peel(g, k, j, l):
    """Pay out l < k units of degree and pin source coordinate j to zero."""
    k = _as_int(k, "degree")
    j = _as_int(j, "level")
    l = _as_int(l, "payout")
    if not isinstance(g, GroupoidElement) or g.primed:
        raise WrongStratum("theta_peel is defined on plain elements")
    if k < 1:
        raise WrongStratum(f"theta_peel handles degrees >= 1, got {k}")
    if not 0 <= j <= g.n - 1:
        raise WrongStratum(f"level j={j} outside 0..{g.n - 1}")
    if not 0 <= l <= k - 1:
        raise WrongStratum(f"payout l={l} outside 0..{k - 1}")
    if g.z != k:
        raise WrongStratum(f"element has degree {g.z}, expected {k}")
    if any(g.w[:j]):
        raise WrongStratum(f"the first {j} source coordinates must be 0")
    if g.w[j] != l:
        raise WrongStratum(f"source coordinate {j} must equal {l}, got {g.w[j]}")
    x = g.x[:j] + (g.x[j] + l,) + g.x[j + 1:]
    w = g.w[:j] + (0,) + g.w[j + 1:]
    return GroupoidElement(n=g.n, z=k - l, x=x, w=w)


def theta_terminal(g, l):
    """Forget a positive degree once every source coordinate is pinned to 0."""
    l = _as_int(l, "degree")
    if not isinstance(g, GroupoidElement) or g.primed:
        raise WrongStratum("theta_terminal is defined on plain elements")
    if l < 1:
        raise WrongStratum(f"theta_terminal handles degrees >= 1, got {l}")
    if g.z != l:
        raise WrongStratum(f"element has degree {g.z}, expected {l}")
    if g.w != (0,) * g.n:
        raise WrongStratum("every source coordinate must be 0")
    return GroupoidElement(n=g.n, z=0, x=g.x, w=g.w)


# ---------------------------------------------------------------------------
# Windowed enumeration.


@dataclass(frozen=True)
class Window:
    """Finite enumeration bound: source entries in [0, W], offsets in [-W, W]."""

    W: int

    def __post_init__(self):
        if isinstance(self.W, bool) or not isinstance(self.W, int) or self.W < 1:
            raise OutOfRange(f"window bound must be an integer >= 1, got {self.W!r}")


def _window_value(window):
    if isinstance(window, Window):
        return window.W
    Window(window)
    return window


@dataclass(frozen=True)
class _WindowSpec:
    """Per-coordinate enumeration ranges for one stratum window.

    ``shear`` marks the codomain of gamma_iso, where the degree of a row
    is z + x[0] instead of the constant z.
    """

    n: int
    z: int
    w_lo: tuple
    w_hi: tuple
    w_inf: tuple
    x_lo: tuple
    x_hi: tuple
    variant: str = "plain"
    shear: bool = False


def _stratum_spec(n, z, W, pins=0, w_over=None, x_over=None, variant="plain", shear=False):
    w_lo = [0] * n
    w_hi = [W] * n
    w_inf = [True] * n
    for i in range(pins):
        w_hi[i] = 0
        w_inf[i] = False
    for i, (lo, hi, inf_ok) in (w_over or {}).items():
        w_lo[i], w_hi[i], w_inf[i] = lo, hi, inf_ok
    x_lo = [-W] * n
    x_hi = [W] * n
    for i, (lo, hi) in (x_over or {}).items():
        x_lo[i], x_hi[i] = lo, hi
    return _WindowSpec(
        n=n, z=z,
        w_lo=tuple(w_lo), w_hi=tuple(w_hi), w_inf=tuple(w_inf),
        x_lo=tuple(x_lo), x_hi=tuple(x_hi),
        variant=variant, shear=shear,
    )


def _iter_raw(spec):
    """Element-level enumeration of a window: raw (z, x, w) tuples.

    The reference semantics for the array engine below; one block per
    position of the first infinite source coordinate.
    """
    n = spec.n

    def pairs(i):
        out = []
        for w in range(spec.w_lo[i], spec.w_hi[i] + 1):
            for x in range(max(spec.x_lo[i], -w), spec.x_hi[i] + 1):
                out.append((x, w))
        return out

    for p in range(n + 1):
        if p < n and not spec.w_inf[p]:
            continue
        # forced zero offsets past position p must be admissible
        if any(spec.x_lo[q] > 0 or spec.x_hi[q] < 0 for q in range(p + 1, n)):
            continue
        inf_tail = (INF,) * (n - p)

        if spec.variant == "primed" and p == 0:
            if spec.shear:
                x0 = -spec.z  # row degree z + x0 must vanish
                if spec.x_lo[0] <= x0 <= spec.x_hi[0]:
                    yield (0, (x0,) + (0,) * (n - 1), inf_tail)
            elif spec.z == 0:
                for x0 in range(spec.x_lo[0], spec.x_hi[0] + 1):
                    yield (0, (x0,) + (0,) * (n - 1), inf_tail)
            continue

        free = [pairs(i) for i in range(p)]
        if any(not ch for ch in free):
            continue
        for combo in itertools.product(*free):
            xs = [c[0] for c in combo]
            ws = [c[1] for c in combo]
            z_row = spec.z + xs[0] if spec.shear else spec.z
            if p < n:
                if spec.variant == "primed":
                    forced = -z_row - sum(xs[1:p])
                else:
                    forced = -z_row - sum(xs)
                if not spec.x_lo[p] <= forced <= spec.x_hi[p]:
                    continue
                yield (z_row, tuple(xs) + (forced,) + (0,) * (n - p - 1),
                       tuple(ws) + inf_tail)
            else:
                yield (z_row, tuple(xs), tuple(ws))


def _element_from_raw(raw, variant):
    z, x, w = raw
    return GroupoidElement(n=len(x), z=z, x=x, w=w, primed=(variant == "primed"))


def enumerate_stratum(n, k, j=0, window=8):
    """All canonical degree-k elements with the first j source coordinates 0,
    finite source entries at most W and offsets at most W in magnitude."""
    n = _as_int(n, "coordinate count")
    if n < 1:
        raise InvalidClass(f"coordinate count must be >= 1, got {n}")
    k = _as_int(k, "degree")
    j = _as_int(j, "level")
    if not 0 <= j <= n:
        raise OutOfRange(f"level j={j} outside 0..{n}")
    W = _window_value(window)
    spec = _stratum_spec(n, k, W, pins=j)
    return [_element_from_raw(raw, "plain") for raw in _iter_raw(spec)]


# --- packed-array fast path -------------------------------------------------

_INF_CODE = 63
_OFFSET = 32
_FAR = 10 ** 6  # stands in for an infinite target coordinate during comparisons


def _np_blocks(spec):
    """Yield (Z, X, W) int64 arrays per first-inf block; W uses _INF_CODE.

    Same row set as _iter_raw, materialized columnwise.
    """
    n = spec.n
    for p in range(n + 1):
        if p < n and not spec.w_inf[p]:
            continue
        if any(spec.x_lo[q] > 0 or spec.x_hi[q] < 0 for q in range(p + 1, n)):
            continue

        if spec.variant == "primed" and p == 0:
            if spec.shear:
                x0 = -spec.z
                if not spec.x_lo[0] <= x0 <= spec.x_hi[0]:
                    continue
                xs0 = np.array([x0], dtype=np.int64)
            elif spec.z == 0:
                xs0 = np.arange(spec.x_lo[0], spec.x_hi[0] + 1, dtype=np.int64)
            else:
                continue
            total = len(xs0)
            X = np.zeros((total, n), dtype=np.int64)
            X[:, 0] = xs0
            Wc = np.full((total, n), _INF_CODE, dtype=np.int64)
            yield np.zeros(total, dtype=np.int64), X, Wc
            continue

        cols = []
        empty = False
        for i in range(p):
            xs, ws = [], []
            for w in range(spec.w_lo[i], spec.w_hi[i] + 1):
                for x in range(max(spec.x_lo[i], -w), spec.x_hi[i] + 1):
                    xs.append(x)
                    ws.append(w)
            if not xs:
                empty = True
                break
            cols.append((np.array(xs, dtype=np.int64), np.array(ws, dtype=np.int64)))
        if empty:
            continue

        total = math.prod(len(c[0]) for c in cols) if cols else 1
        X = np.zeros((total, n), dtype=np.int64)
        Wc = np.full((total, n), _INF_CODE, dtype=np.int64)
        rep = total
        for i, (xa, wa) in enumerate(cols):
            m = len(xa)
            rep //= m
            reps = np.repeat(xa, rep)
            X[:, i] = np.tile(reps, total // (rep * m))
            Wc[:, i] = np.tile(np.repeat(wa, rep), total // (rep * m))

        Z = spec.z + X[:, 0] if spec.shear else np.full(total, spec.z, dtype=np.int64)
        if p < n:
            if spec.variant == "primed":
                X[:, p] = -Z - X[:, 1:p].sum(axis=1)
            else:
                X[:, p] = -Z - X[:, :p].sum(axis=1)
            keep = (X[:, p] >= spec.x_lo[p]) & (X[:, p] <= spec.x_hi[p])
            if not keep.all():
                Z, X, Wc = Z[keep], X[keep], Wc[keep]
        if len(Z):
            yield Z, X, Wc


def _pack(Z, X, Wc):
    """Fold rows into single int64 keys; fields stay within 6 bits each."""
    assert np.all(np.abs(Z) < _OFFSET) and np.all(np.abs(X) < _OFFSET)
    assert np.all((Wc >= 0) & (Wc <= _INF_CODE))
    key = Z + _OFFSET
    for i in range(X.shape[1]):
        key = key * 64 + (X[:, i] + _OFFSET)
    for i in range(Wc.shape[1]):
        key = key * 64 + Wc[:, i]
    return key


def _unpack(key, n):
    fields = []
    k = int(key)
    for _ in range(2 * n + 1):
        k, f = divmod(k, 64)
        fields.append(f)
    fields.reverse()
    z = fields[0] - _OFFSET
    x = [v - _OFFSET for v in fields[1:n + 1]]
    w = [INF if v == _INF_CODE else v for v in fields[n + 1:]]
    return {"z": z, "x": x, "w": [ext_to_json(v) for v in w]}


def _collect_keys(spec):
    parts = [_pack(Z, X, Wc) for Z, X, Wc in _np_blocks(spec)]
    if not parts:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(parts)


def _targets(X, Wc):
    return np.where(Wc == _INF_CODE, _FAR, X + Wc)


# --- bijection checks -------------------------------------------------------

MAP_IDS = ("theta-neg", "theta-shift", "theta-peel", "theta-terminal", "gamma", "t")


def _bijection_setup(map_id, n, k, j, l, W):
    """Domain and codomain windows plus the columnwise action of the map.

    Windows are paired so the map carries the domain box exactly onto the
    codomain box: whatever shift the map applies to a coordinate is also
    applied to that coordinate's range.
    """
    if map_id == "theta-neg":
        if k is None or k > 0:
            raise OutOfRange("theta-neg needs a degree k <= 0")
        dom = _stratum_spec(n, k, W)
        cod = _stratum_spec(
            n, 0, W,
            w_over={0: (-k, -k + W, True)},
            x_over={0: (-W + k, W + k)},
        )

        def act(Z, X, Wc):
            X2 = X.copy()
            X2[:, 0] += k
            W2 = Wc.copy()
            W2[:, 0] = np.where(W2[:, 0] == _INF_CODE, _INF_CODE, W2[:, 0] - k)
            return np.zeros_like(Z), X2, W2

        return dom, cod, act

    if map_id == "theta-shift":
        if k is None or k < 1 or j is None or not 0 <= j <= n - 1:
            raise OutOfRange("theta-shift needs k >= 1 and a level 0 <= j <= n-1")
        dom = _stratum_spec(n, k, W, pins=j, w_over={j: (k, k + W, True)})
        cod = _stratum_spec(n, 0, W, pins=j, x_over={j: (-W + k, W + k)})

        def act(Z, X, Wc):
            X2 = X.copy()
            X2[:, j] += k
            W2 = Wc.copy()
            W2[:, j] = np.where(W2[:, j] == _INF_CODE, _INF_CODE, W2[:, j] - k)
            return np.zeros_like(Z), X2, W2

        return dom, cod, act

    if map_id == "theta-peel":
        if k is None or k < 1 or j is None or not 0 <= j <= n - 1:
            raise OutOfRange("theta-peel needs k >= 1 and a level 0 <= j <= n-1")
        if l is None or not 0 <= l <= k - 1:
            raise OutOfRange(f"theta-peel needs a payout 0 <= l <= {k - 1}")
        dom = _stratum_spec(n, k, W, pins=j, w_over={j: (l, l, False)})
        cod = _stratum_spec(n, k - l, W, pins=j + 1, x_over={j: (-W + l, W + l)})

        def act(Z, X, Wc):
            X2 = X.copy()
            X2[:, j] += l
            W2 = Wc.copy()
            W2[:, j] = 0
            return np.full_like(Z, k - l), X2, W2

        return dom, cod, act

    if map_id == "theta-terminal":
        if l is None or l < 1:
            raise OutOfRange("theta-terminal needs a degree l >= 1")
        dom = _stratum_spec(n, l, W, pins=n)
        cod = _stratum_spec(n, 0, W, pins=n)

        def act(Z, X, Wc):
            return np.zeros_like(Z), X, Wc

        return dom, cod, act

    if map_id == "gamma":
        if k is None:
            raise OutOfRange("gamma needs a degree k")
        dom = _stratum_spec(n, k, W)
        cod = _stratum_spec(n, k, W, variant="primed", shear=True)

        def act(Z, X, Wc):
            return Z + X[:, 0], X, Wc

        return dom, cod, act

    if map_id == "t":
        dom = _stratum_spec(n, 0, W)
        cod = _stratum_spec(n, 0, W)

        def act(Z, X, Wc):
            return np.zeros_like(Z), X, Wc

        return dom, cod, act

    raise OutOfRange(f"unknown map id {map_id!r}; expected one of {MAP_IDS}")


def verify_bijection(map_id, n, k=None, j=None, l=None, window=8):
    """Exhaustively check one structural map on paired windows.

    The enumerated image must hit the independently enumerated codomain
    window exactly once each, and every element must keep its target.
    """
    n = _as_int(n, "coordinate count")
    if n < 1:
        raise InvalidClass(f"coordinate count must be >= 1, got {n}")
    W = _window_value(window)
    dom_spec, cod_spec, act = _bijection_setup(map_id, n, k, j, l, W)
    params = {"map": map_id, "n": n, "k": k, "j": j, "l": l, "W": W}

    domain_size = 0
    image_parts = []
    counterexample = None
    for Z, X, Wc in _np_blocks(dom_spec):
        Z2, X2, W2 = act(Z, X, Wc)
        if counterexample is None:
            bad = np.nonzero(~(_targets(X, Wc) == _targets(X2, W2)).all(axis=1))[0]
            if len(bad):
                row = int(bad[0])
                counterexample = {
                    "kind": "target-moved",
                    "element": _unpack(_pack(Z[row:row + 1], X[row:row + 1],
                                             Wc[row:row + 1])[0], n),
                }
        image_parts.append(_pack(Z2, X2, W2))
        domain_size += len(Z)

    image = np.concatenate(image_parts) if image_parts else np.zeros(0, dtype=np.int64)
    codomain = _collect_keys(cod_spec)
    image_sorted = np.sort(image)
    codomain_sorted = np.sort(codomain)

    injective = len(image) < 2 or bool((np.diff(image_sorted) != 0).all())
    onto = bool(np.array_equal(image_sorted, codomain_sorted))
    if counterexample is None and not injective:
        dup = int(np.nonzero(np.diff(image_sorted) == 0)[0][0])
        counterexample = {"kind": "collision",
                         "element": _unpack(image_sorted[dup], n)}
    if counterexample is None and not onto:
        img_set = set(image_sorted.tolist())
        cod_set = set(codomain_sorted.tolist())
        extra = sorted(img_set - cod_set)
        missing = sorted(cod_set - img_set)
        if extra:
            counterexample = {"kind": "image-outside-codomain",
                             "element": _unpack(extra[0], n)}
        else:
            counterexample = {"kind": "codomain-not-covered",
                             "element": _unpack(missing[0], n)}

    return VerifyReport(
        check="bijection",
        params=params,
        passed=counterexample is None,
        domain_size=domain_size,
        image_size=int(len(codomain)),
        counterexample=counterexample,
    )


def verify_partition(n, k, j, window=8):
    """Check that a windowed stratum splits exactly into its k + 1 pieces.

    The degree-k, level-j stratum is cut along source coordinate j: one
    piece with at least k to give (including inf), and one pinned piece
    per shortfall l = 0..k-1.  Pieces are enumerated independently and
    must reproduce the full window with no overlap and no gap.
    """
    n = _as_int(n, "coordinate count")
    if n < 1:
        raise InvalidClass(f"coordinate count must be >= 1, got {n}")
    k = _as_int(k, "degree")
    j = _as_int(j, "level")
    if k < 1:
        raise OutOfRange(f"partitions exist for degrees >= 1, got {k}")
    if not 0 <= j <= n - 1:
        raise OutOfRange(f"level j={j} outside 0..{n - 1}")
    W = _window_value(window)

    full = _collect_keys(
        _stratum_spec(n, k, W, pins=j, w_over={j: (0, k + W, True)})
    )
    pieces = [
        _collect_keys(_stratum_spec(n, k, W, pins=j, w_over={j: (k, k + W, True)}))
    ]
    for l in range(k):
        pieces.append(
            _collect_keys(_stratum_spec(n, k, W, pins=j, w_over={j: (l, l, False)}))
        )

    union = np.sort(np.concatenate(pieces))
    full_sorted = np.sort(full)
    passed = bool(np.array_equal(full_sorted, union))
    counterexample = None
    if not passed:
        full_set = set(full_sorted.tolist())
        union_list = union.tolist()
        union_set = set(union_list)
        if len(union_list) != len(union_set):
            seen = set()
            for key in union_list:
                if key in seen:
                    counterexample = {"kind": "overlap", "element": _unpack(key, n)}
                    break
                seen.add(key)
        elif full_set - union_set:
            counterexample = {"kind": "gap",
                             "element": _unpack(sorted(full_set - union_set)[0], n)}
        else:
            counterexample = {"kind": "spill",
                             "element": _unpack(sorted(union_set - full_set)[0], n)}

    return VerifyReport(
        check="partition",
        params={"n": n, "k": k, "j": j, "W": W},
        passed=passed,
        domain_size=int(len(full)),
        image_size=int(sum(len(p) for p in pieces)),
        counterexample=counterexample,
    )


# --- terminal tally ---------------------------------------------------------


def windowed_terminal_counts(n, k, window=6):
    """Peel a windowed degree-k start stratum down to terminal pieces.

    Splits the concrete element set along the partition, pushes each piece
    through its bijection, and recurses; returns the number of terminal
    degree-zero copies reached at every level together with a conservation
    report (no element lost or duplicated along the way).  The copy counts
    are structural and do not depend on the window bound.
    """
    n = _as_int(n, "coordinate count")
    if n < 1:
        raise InvalidClass(f"coordinate count must be >= 1, got {n}")
    k = _as_int(k, "degree")
    if k < 1:
        raise OutOfRange(f"the peeling starts at degree >= 1, got {k}")
    W = _window_value(window)

    start = set(enumerate_stratum(n, k, j=0, window=W))
    counts = [0] * (n + 1)
    terminal_total = 0
    losses = []

    def push(elems, fn):
        image = {fn(g) for g in elems}
        if len(image) != len(elems):
            losses.append(len(elems) - len(image))
        return image

    def expand(elems, kk, jj):
        nonlocal terminal_total
        if jj == n:
            counts[n] += 1
            terminal_total += len(push(elems, lambda g: theta_terminal(g, kk)))
            return
        above = {g for g in elems if g.w[jj] >= kk}
        shortfalls = {l: set() for l in range(kk)}
        for g in elems - above:
            shortfalls[g.w[jj]].add(g)
        if len(above) + sum(len(s) for s in shortfalls.values()) != len(elems):
            losses.append(-1)
        counts[jj] += 1
        terminal_total += len(push(above, lambda g: theta_shift(g, kk, jj)))
        for l in range(kk):
            expand(push(shortfalls[l], lambda g, _l=l: theta_peel(g, kk, jj, _l)),
                   kk - l, jj + 1)

    expand(start, k, 0)
    conserved = not losses and terminal_total == len(start)
    report = VerifyReport(
        check="terminal-tally",
        params={"n": n, "k": k, "W": W, "counts": counts},
        passed=conserved,
        domain_size=len(start),
        image_size=terminal_total,
        counterexample=None if conserved else {"kind": "element-count-drift"},
    )
    return tuple(counts), report


def verify_terminal_counts(n, k, window=6):
    """Compare the windowed terminal tally against the symbolic multiset."""
    from .line_bundles import recursion_expand

    counts, report = windowed_terminal_counts(n, k, window)
    expected = recursion_expand(n, k).mult
    passed = report.passed and counts == expected
    counterexample = report.counterexample
    if counterexample is None and counts != expected:
        counterexample = {
            "kind": "multiplicity-mismatch",
            "counts": list(counts),
            "expected": list(expected),
        }
    return VerifyReport(
        check="terminal-counts",
        params={"n": n, "k": k, "W": _window_value(window)},
        passed=passed,
        domain_size=report.domain_size,
        image_size=report.image_size,
        counterexample=counterexample,
    )

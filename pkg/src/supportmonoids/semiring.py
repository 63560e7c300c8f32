"""Exact arithmetic over the extended naturals N0* = {0, 1, 2, ...} ∪ {inf}.

Addition and multiplication extend the usual ones on the nonnegative
integers by the absorption rules

    x + inf = inf + x = inf        for every x,
    x * inf = inf * x = inf        for every x != 0,
    0 * inf = inf * 0 = 0.

With these rules N0* is a commutative semiring; there is no subtraction
and no cancellation (x + inf = y + inf for all x, y).

Values are plain Python ints (arbitrary precision, so no overflow) or
the unique sentinel ``INF``:

>>> INF + 3
INF
>>> 0 * INF
0
>>> 4 * INF
INF

Vectors over N0* are plain tuples, coordinates indexed 1..s in every
user-facing index set.  Index sets are frozensets of 1-based ints:

>>> vec_add((1, 0, 0), (0, 1, 1))
(1, 1, 1)
>>> scale(INF, (0, 1, 1))
(0, INF, INF)
>>> supports((INF, 1, 0))
(frozenset({1, 2}), frozenset({1}))

The text encoding uses the token "inf" (case-insensitive) and commas:

>>> parse_vec("1,inf,0")
(1, INF, 0)
>>> format_vec((1, INF, 0))
'1,inf,0'

Everything in this module is immutable and pure; values can be shared
freely between threads.
"""

from __future__ import annotations

from typing import Iterable, Union

MAX_DIM = 24  # subset enumeration must stay tractable; rejected at parse time


class _Infinity:
    """The unique infinite element of N0*.  Use the module constant INF."""

    __slots__ = ()

    def __add__(self, other):
        if isinstance(other, int) or other is self:
            return self
        return NotImplemented

    __radd__ = __add__

    def __mul__(self, other):
        if other is self:
            return self
        if isinstance(other, int):
            return 0 if other == 0 else self
        return NotImplemented

    __rmul__ = __mul__

    # Total order with every finite value below INF.
    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return isinstance(other, int)

    def __ge__(self, other):
        return isinstance(other, int) or other is self

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __hash__(self):
        return hash("supportmonoids.INF")

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):  # pickle back to the singleton
        return (_restore_inf, ())


def _restore_inf():
    return INF


INF = _Infinity()

ExtNat = Union[int, _Infinity]
Vec = tuple  # tuple of ExtNat
IndexSet = frozenset  # frozenset of 1-based ints


def is_finite(a: ExtNat) -> bool:
    return a is not INF


def add(a: ExtNat, b: ExtNat) -> ExtNat:
    """a + b in N0*; any infinite operand makes the sum infinite."""
    if a is INF or b is INF:
        return INF
    return a + b


def mul(a: ExtNat, b: ExtNat) -> ExtNat:
    """a * b in N0*; note 0 * inf = 0 while inf * x = inf for x != 0."""
    if a is INF:
        return 0 if b == 0 else INF
    if b is INF:
        return 0 if a == 0 else INF
    return a * b


def _check_extnat(a, what="value") -> ExtNat:
    if a is INF:
        return a
    if isinstance(a, bool) or not isinstance(a, int):
        raise ValueError(f"{what} must be a nonnegative integer or INF, got {a!r}")
    if a < 0:
        raise ValueError(f"{what} must be nonnegative, got {a}")
    return a


def check_vec(x: Iterable, what="vector") -> Vec:
    """Validate and normalize a vector over N0* to a tuple."""
    t = tuple(_check_extnat(v, what) for v in x)
    if not t:
        raise ValueError(f"{what} must have length >= 1")
    if len(t) > MAX_DIM:
        raise ValueError(f"{what} longer than the supported maximum of {MAX_DIM}")
    return t


def check_index_set(H: Iterable[int], s: int) -> IndexSet:
    """Validate a subset of {1, ..., s}."""
    Hs = frozenset(H)
    for i in Hs:
        if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= s:
            raise ValueError(f"index {i!r} outside 1..{s}")
    return Hs


def vec_add(x: Vec, y: Vec) -> Vec:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return tuple(add(a, b) for a, b in zip(x, y))


def scale(c: ExtNat, x: Vec) -> Vec:
    return tuple(mul(c, v) for v in x)


def dot(row: tuple, x: Vec) -> ExtNat:
    """Row of nonnegative int coefficients times a vector, in N0*."""
    if len(row) != len(x):
        raise ValueError(f"length mismatch: {len(row)} vs {len(x)}")
    total = 0
    for r, v in zip(row, x):
        if r == 0:
            continue
        if v is INF:
            return INF
        total += r * v
    return total


def supp(x: Vec) -> IndexSet:
    """Indices (1-based) where x is nonzero."""
    return frozenset(i for i, v in enumerate(x, 1) if v != 0)


def inf_supp(x: Vec) -> IndexSet:
    """Indices (1-based) where x is infinite."""
    return frozenset(i for i, v in enumerate(x, 1) if v is INF)


def supports(x: Vec) -> tuple[IndexSet, IndexSet]:
    """(support, infinite support); the second is contained in the first."""
    return supp(x), inf_supp(x)


def divides(x: Vec, y: Vec) -> bool:
    """True iff some z in (N0*)^s has x + z = y.

    Coordinatewise: y_i infinite (anything absorbs), or both finite
    with x_i <= y_i.
    """
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    for a, b in zip(x, y):
        if b is INF:
            continue
        if a is INF or a > b:
            return False
    return True


def project(x: Vec, H: Iterable[int]) -> Vec:
    """Drop the coordinates in H (1-based), keeping the rest in order."""
    Hs = check_index_set(H, len(x))
    return tuple(v for i, v in enumerate(x, 1) if i not in Hs)


def inject(x: Vec, H: Iterable[int]) -> Vec:
    """Place inf on the coordinates in H and x on the complement.

    The ambient length is len(x) + len(H); project(inject(x, H), H) == x.
    """
    Hs = frozenset(H)
    s = len(x) + len(Hs)
    Hs = check_index_set(Hs, s)
    out = []
    it = iter(x)
    for i in range(1, s + 1):
        out.append(INF if i in Hs else next(it))
    return tuple(out)


def zero_vec(s: int) -> Vec:
    return (0,) * s


def unit_vec(s: int, i: int) -> Vec:
    return tuple(1 if j == i else 0 for j in range(1, s + 1))


def sort_key(x: Vec):
    """Canonical total order: coordinatewise, every finite value below inf,
    ties broken left to right.  Used everywhere output must be deterministic."""
    return tuple((1, 0) if v is INF else (0, v) for v in x)


def canonical_sorted(vecs: Iterable[Vec]) -> tuple[Vec, ...]:
    return tuple(sorted(set(vecs), key=sort_key))


# -- text and JSON encoding -------------------------------------------------

def parse_extnat(token: str) -> ExtNat:
    t = token.strip()
    if t.lower() == "inf":
        return INF
    if not t.isdigit():
        raise ValueError(f"cannot parse {token!r} as a nonnegative integer or 'inf'")
    return int(t)


def format_extnat(a: ExtNat) -> str:
    return "inf" if a is INF else str(a)


def parse_vec(text: str) -> Vec:
    return check_vec(parse_extnat(tok) for tok in text.split(","))


def format_vec(x: Vec) -> str:
    return ",".join(format_extnat(v) for v in x)


def vec_to_json(x: Vec) -> list:
    return ["inf" if v is INF else v for v in x]


def vec_from_json(obj) -> Vec:
    if not isinstance(obj, (list, tuple)):
        raise ValueError(f"vector must be a JSON array, got {obj!r}")
    out = []
    for v in obj:
        if isinstance(v, str):
            out.append(parse_extnat(v))
        else:
            out.append(v)
    return check_vec(out)

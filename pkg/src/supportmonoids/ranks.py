"""Completion-side data: local ranks of indecomposables over minimal primes.

A rank matrix records, for each minimal prime of the completed base and
each indecomposable summand, the local rank of that summand.  A
countably generated direct sum with multiplicity vector x descends to
the base exactly when its weighted rank a_j·x agrees over all primes j,
so the descendable multiplicity vectors form the solution monoid of the
pairwise-equality system; one row per prime beyond the first suffices
because equality in N0* is transitive.

``realize_wiegand`` runs the construction the other way: given an
integer matrix E it produces a rank matrix whose descendable vectors
form the largest monoid with finite part {x in N0^s : E·x = 0}.

These computations take the rank data at face value; that the
completion is reduced and the module torsion-free are assumptions
recorded in serialized output, not checkable from a matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .equations import DioSystem, from_integer_matrix
from .errors import MissingOrderUnitError
from .hilbert import find_order_unit
from .semiring import Vec, dot

ASSUMPTIONS = ("reduced completion", "finitely generated torsion-free module")


@dataclass(frozen=True)
class RankMatrix:
    """a[j][i] = rank at minimal prime j of the i-th indecomposable.

    At least two primes; no indecomposable may vanish at every prime.
    """

    a: tuple
    labels: tuple | None = None

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.a)
        if len(rows) < 2:
            raise ValueError("a rank matrix needs at least two minimal primes")
        width = len(rows[0])
        if width < 1:
            raise ValueError("a rank matrix needs at least one indecomposable")
        for row in rows:
            if len(row) != width:
                raise ValueError("rank matrix rows must have equal length")
            for v in row:
                if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                    raise ValueError(f"ranks must be nonnegative integers, got {v!r}")
        for i in range(width):
            if all(row[i] == 0 for row in rows):
                raise ValueError(f"column {i + 1} is zero: every summand must be nonzero")
        object.__setattr__(self, "a", rows)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != width:
                raise ValueError("one label per indecomposable required")
            object.__setattr__(self, "labels", labels)

    @property
    def primes(self) -> int:
        return len(self.a)

    @property
    def s(self) -> int:
        return len(self.a[0])

    def to_json(self) -> dict:
        out = {"s": self.s, "primes": self.primes, "a": [list(r) for r in self.a]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "RankMatrix":
        if not isinstance(obj, dict) or "a" not in obj:
            raise ValueError("rank-matrix JSON needs key 'a'")
        rm = cls(a=tuple(tuple(r) for r in obj["a"]),
                 labels=tuple(obj["labels"]) if "labels" in obj else None)
        if "s" in obj and obj["s"] != rm.s:
            raise ValueError(f"declared s={obj['s']} but matrix has {rm.s} columns")
        if "primes" in obj and obj["primes"] != rm.primes:
            raise ValueError(f"declared primes={obj['primes']} but matrix has {rm.primes} rows")
        return rm


def vstar_system(rm: RankMatrix) -> DioSystem:
    """The equations a_1·x = a_k·x (k = 2, ..., primes) cutting out the
    descendable multiplicity vectors; trivially equal row pairs are
    dropped."""
    F, G = [], []
    first = rm.a[0]
    for row in rm.a[1:]:
        if row == first:
            continue
        F.append(first)
        G.append(row)
    return DioSystem(s=rm.s, F=tuple(F), G=tuple(G))


def is_extended(rm: RankMatrix, x: Vec) -> bool:
    """Do the weighted ranks of x agree at every minimal prime?"""
    if len(x) != rm.s:
        raise ValueError(f"vector has length {len(x)}, expected {rm.s}")
    values = [dot(row, x) for row in rm.a]
    return all(v == values[0] for v in values[1:])


def realize_wiegand(E) -> tuple[RankMatrix, DioSystem]:
    """Rank data realizing the largest monoid over the finite part
    {x in N0^s : E·x = 0}.

    With M = 1 + max(0, -min(E)) and pairwise distinct shifts
    h_i = M + i, the rank of summand i is e_{ji} + h_i at prime
    j <= rows(E) and h_i at one extra prime; all ranks are strictly
    positive, so any vector with an infinite entry descends.
    Requires a strictly positive finite solution of E·x = 0.
    """
    rows = tuple(tuple(r) for r in E)
    if not rows:
        raise ValueError("E must have at least one row")
    s = len(rows[0])
    finite_part = from_integer_matrix(rows)
    if find_order_unit(finite_part) is None:
        raise MissingOrderUnitError("E·x = 0 has no strictly positive solution")
    M = 1 + max(0, -min(v for row in rows for v in row))
    h = tuple(M + i for i in range(1, s + 1))
    rank_rows = [tuple(v + h[i] for i, v in enumerate(row)) for row in rows]
    rank_rows.append(h)
    rm = RankMatrix(a=tuple(rank_rows))
    return rm, vstar_system(rm)

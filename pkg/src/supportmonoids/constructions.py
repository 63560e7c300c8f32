"""Building monoids over (N0*)^s from a finite part, and (de)composing
finite parts as direct sums.

Given a finite part A generated by a Hilbert basis:

* ``a_plus_inf_a``  glues the smallest possible monoid with that finite
  part: the infinite supports are exactly the supports of members of A
  and each family is the projection of A.
* ``b_min`` / ``b_max`` glue the least and the largest monoids among
  those given by almost-free (respectively, arbitrary) systems of
  supports with finite part A: supports are the up-closure of the
  member supports, respectively all subsets, and every nonempty family
  is free.

``compose_direct_sum`` / ``decompose_direct_sum`` realize and recognize
internal direct sums A = A_1 ⊕ A_2 of a full finite part via disjoint
outer coordinate blocks I_1, I_2, a shared block I_3, and the two
"shadow" maps f_i recording what each factor deposits on I_3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import MissingOrderUnitError, ResourceLimitError
from .hilbert import HilbertBasis, generated_upto, minimize_generators
from .semiring import (IndexSet, Vec, canonical_sorted, check_index_set,
                       sort_key, supp, unit_vec, zero_vec)
from .supports import SystemOfSupports

MAX_POWERSET_DIM = 16      # materializing 2^s support sets past this is refused
MAX_DECOMPOSE_GENS = 20    # partition search is exponential in the basis size
UNIQUENESS_BOUND = 5       # truncated uniqueness verification for direct sums


def _order_unit_of(basis: HilbertBasis) -> Vec:
    total = zero_vec(basis.dim)
    for g in basis.gens:
        total = tuple(a + b for a, b in zip(total, g))
    if not all(v > 0 for v in total):
        raise MissingOrderUnitError(
            "the generated monoid has no strictly positive element")
    return total


def _support_closure(gens) -> set:
    """All unions of generator supports, plus the empty set."""
    out = {frozenset()}
    frontier = [supp(g) for g in gens]
    for H in frontier:
        out.add(H)
    changed = True
    while changed:
        changed = False
        for H in list(out):
            for K in frontier:
                u = H | K
                if u not in out:
                    out.add(u)
                    changed = True
    return out


def _free_basis(dim: int) -> HilbertBasis:
    return HilbertBasis(dim, canonical_sorted(unit_vec(dim, i + 1) for i in range(dim)))


def a_plus_inf_a(basis: HilbertBasis) -> SystemOfSupports:
    """The monoid {a1 + inf·a2 : a1, a2 in A} as a system of supports.

    Its supports are the supports of members of A and each family is the
    projection of A; it is the unique minimal monoid given by a system
    of supports whose finite part is A.
    """
    unit = _order_unit_of(basis)
    s = basis.dim
    fams = []
    for H in _support_closure(basis.gens):
        k = s - len(H)
        if k == 0:
            fams.append((H, HilbertBasis(0, ())))
            continue
        keep = [i for i in range(1, s + 1) if i not in H]
        projected = [tuple(g[i - 1] for i in keep) for g in basis.gens]
        fams.append((H, HilbertBasis.from_generators(k, projected)))
    return SystemOfSupports(s=s, unit=unit, families=tuple(fams))


def _free_families(s: int, supports_set, basis: HilbertBasis):
    fams = []
    for H in supports_set:
        if not H:
            fams.append((H, basis))
        elif len(H) == s:
            fams.append((H, HilbertBasis(0, ())))
        else:
            fams.append((H, _free_basis(s - len(H))))
    return tuple(fams)


def b_min(basis: HilbertBasis) -> SystemOfSupports:
    """The least monoid given by an almost-free system of supports with
    finite part A: supports are all supersets of member supports, and
    every nonempty family is free."""
    unit = _order_unit_of(basis)
    s = basis.dim
    if s > MAX_POWERSET_DIM:
        raise ResourceLimitError(f"materializing subsets of {s} coordinates refused")
    min_supports = [supp(g) for g in basis.gens]
    S = {frozenset()}
    for combo in itertools.chain.from_iterable(
            itertools.combinations(range(1, s + 1), r) for r in range(1, s + 1)):
        H = frozenset(combo)
        if any(H >= m for m in min_supports):
            S.add(H)
    return SystemOfSupports(s=s, unit=unit, families=_free_families(s, S, basis))


def b_max(basis: HilbertBasis) -> SystemOfSupports:
    """The largest monoid given by a system of supports with finite part A:
    every subset is a support and every nonempty family is free."""
    unit = _order_unit_of(basis)
    s = basis.dim
    if s > MAX_POWERSET_DIM:
        raise ResourceLimitError(f"materializing subsets of {s} coordinates refused")
    S = {frozenset(c) for r in range(s + 1)
         for c in itertools.combinations(range(1, s + 1), r)}
    return SystemOfSupports(s=s, unit=unit, families=_free_families(s, S, basis))


def monoid_sum(m1, m2) -> tuple:
    """Generators of the sum of two generated submonoids of (N0*)^s:
    concatenate and sweep out redundancies."""
    m1, m2 = tuple(tuple(g) for g in m1), tuple(tuple(g) for g in m2)
    dims = {len(g) for g in m1 + m2}
    if len(dims) > 1:
        raise ValueError(f"mixed generator dimensions: {sorted(dims)}")
    return minimize_generators(m1 + m2)


# -- direct sums of finite parts ---------------------------------------------

@dataclass(frozen=True)
class DirectSumData:
    """A witness that a full finite part splits as A_1 ⊕ A_2.

    I1, I2, I3 partition {1, ..., s} with I1, I2 nonempty; B_i is the
    (full) image of A_i on its own block I_i; row j of f_i is the I_3
    part of the lift of the j-th generator of B_i.
    """

    s: int
    I1: IndexSet
    I2: IndexSet
    I3: IndexSet
    B1: HilbertBasis
    B2: HilbertBasis
    f1: tuple
    f2: tuple

    def __post_init__(self):
        I1 = check_index_set(self.I1, self.s)
        I2 = check_index_set(self.I2, self.s)
        I3 = check_index_set(self.I3, self.s)
        if not I1 or not I2:
            raise ValueError("I1 and I2 must be nonempty")
        if I1 | I2 | I3 != frozenset(range(1, self.s + 1)) or \
                I1 & I2 or I1 & I3 or I2 & I3:
            raise ValueError("I1, I2, I3 must partition the coordinates")
        object.__setattr__(self, "I1", I1)
        object.__setattr__(self, "I2", I2)
        object.__setattr__(self, "I3", I3)
        for name, basis, rows, block in (("f1", self.B1, self.f1, I1),
                                         ("f2", self.B2, self.f2, I2)):
            if basis.dim != len(block):
                raise ValueError(f"B over {sorted(block)} must have dimension {len(block)}")
            rows = tuple(tuple(r) for r in rows)
            object.__setattr__(self, name, rows)
            if len(rows) != len(basis.gens):
                raise ValueError(f"{name} must have one row per generator")
            for r in rows:
                if len(r) != len(I3):
                    raise ValueError(f"{name} rows must have length |I3| = {len(I3)}")
                if any(isinstance(v, bool) or not isinstance(v, int) or v < 0 for v in r):
                    raise ValueError(f"{name} rows must be nonnegative integers")

    def order_unit_support_ok(self) -> bool:
        """The composed monoid contains an order-unit iff the shadows of the
        two factors jointly cover I3."""
        covered = set()
        for rows, block in ((self.f1, self.I3), (self.f2, self.I3)):
            pos = sorted(self.I3)
            for r in rows:
                covered.update(pos[j] for j in range(len(pos)) if r[j])
        return frozenset(covered) == self.I3

    def to_json(self) -> dict:
        return {
            "I1": sorted(self.I1), "I2": sorted(self.I2), "I3": sorted(self.I3),
            "B1": self.B1.to_json(), "B2": self.B2.to_json(),
            "f1": [list(r) for r in self.f1], "f2": [list(r) for r in self.f2],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DirectSumData":
        I1, I2, I3 = (frozenset(obj[k]) for k in ("I1", "I2", "I3"))
        s = len(I1) + len(I2) + len(I3)
        return cls(
            s=s, I1=I1, I2=I2, I3=I3,
            B1=HilbertBasis.from_generators(len(I1), obj["B1"]),
            B2=HilbertBasis.from_generators(len(I2), obj["B2"]),
            f1=tuple(tuple(r) for r in obj["f1"]),
            f2=tuple(tuple(r) for r in obj["f2"]),
        )


def _embed(d: DirectSumData, which: int, g: Vec, shadow: Vec) -> Vec:
    """h(g, 0) or h(0, g): place g on its block and its shadow on I3."""
    own = sorted(d.I1 if which == 1 else d.I2)
    third = sorted(d.I3)
    out = [0] * d.s
    for j, i in enumerate(own):
        out[i - 1] = g[j]
    for j, i in enumerate(third):
        out[i - 1] = shadow[j]
    return tuple(out)


def compose_direct_sum(d: DirectSumData, require_order_unit: bool = False) -> HilbertBasis:
    """The basis of the glued finite part h(B1 x B2) ⊆ N0^s."""
    if require_order_unit and not d.order_unit_support_ok():
        raise MissingOrderUnitError(
            "supp(f1) ∪ supp(f2) does not cover I3; no order-unit exists")
    gens = [_embed(d, 1, g, r) for g, r in zip(d.B1.gens, d.f1)]
    gens += [_embed(d, 2, g, r) for g, r in zip(d.B2.gens, d.f2)]
    return HilbertBasis.from_generators(d.s, gens)


def decompose_direct_sum(basis: HilbertBasis,
                         bound: int = UNIQUENESS_BOUND) -> DirectSumData | None:
    """Search for a splitting of the generated monoid as a direct sum.

    Generators are split into two groups; the blocks are read off the
    group supports; a split is accepted when, on the truncated monoid,
    every member has exactly one expression as group1 + group2 and the
    shadow maps are well defined on the projected generators.  Returns
    the first witness in canonical order, or None.  Assumes the input
    generates a full monoid with an order-unit.
    """
    gens = basis.gens
    if len(gens) > MAX_DECOMPOSE_GENS:
        raise ResourceLimitError(
            f"refusing partition search over {len(gens)} > {MAX_DECOMPOSE_GENS} generators")
    if len(gens) < 2:
        return None
    _order_unit_of(basis)
    s = basis.dim
    coords = frozenset(range(1, s + 1))
    full_closure = generated_upto(gens, bound, s)
    rest = range(1, len(gens))
    for r in range(0, len(gens) - 1):
        for extra in itertools.combinations(rest, r):
            group1 = (gens[0],) + tuple(gens[i] for i in extra)
            group2 = tuple(g for g in gens if g not in group1)
            supp1 = frozenset().union(*(supp(g) for g in group1))
            supp2 = frozenset().union(*(supp(g) for g in group2))
            if supp1 | supp2 != coords:
                continue
            I1, I2, I3 = supp1 - supp2, supp2 - supp1, supp1 & supp2
            if not I1 or not I2:
                continue
            witness = _check_split(basis, group1, group2, I1, I2, I3,
                                   full_closure, bound)
            if witness is not None:
                return witness
    return None


def _check_split(basis, group1, group2, I1, I2, I3, full_closure, bound):
    s = basis.dim
    c1 = sorted(generated_upto(group1, bound, s), key=sort_key)
    c2 = generated_upto(group2, bound, s)
    for x in full_closure:
        count = 0
        for u in c1:
            if all(a <= b for a, b in zip(u, x)):
                if tuple(b - a for a, b in zip(u, x)) in c2:
                    count += 1
                    if count > 1:
                        return None
        if count != 1:
            return None
    pieces = []
    for group, block in ((group1, I1), (group2, I2)):
        own = sorted(block)
        third = sorted(I3)
        proj = [tuple(g[i - 1] for i in own) for g in group]
        shadows = [tuple(g[i - 1] for i in third) for g in group]
        seen = {}
        for p, sh in zip(proj, shadows):
            if not any(p):
                return None  # a factor generator invisible on its own block
            if seen.setdefault(p, sh) != sh:
                return None  # shadow map not well defined
        order = sorted(range(len(proj)), key=lambda i: sort_key(proj[i]))
        uniq = []
        rows = []
        for i in order:
            if proj[i] in (q for q, _ in uniq):
                continue
            uniq.append((proj[i], shadows[i]))
            rows.append(shadows[i])
        try:
            b = HilbertBasis(len(own), tuple(p for p, _ in uniq))
        except ValueError:
            return None
        pieces.append((b, tuple(rows)))
    (b1, f1), (b2, f2) = pieces
    return DirectSumData(s=s, I1=I1, I2=I2, I3=I3, B1=b1, B2=b2, f1=f1, f2=f2)


def decomposed_almost_free(d: DirectSumData) -> bool:
    """Is A + inf·A of the composed monoid given by an almost-free system?

    True exactly when each factor is free on its block and every
    generator's shadow covers all of I3 (shadow supports of sums are
    unions over the generators used, so the generator check is exact).
    """
    for basis, rows in ((d.B1, d.f1), (d.B2, d.f2)):
        free = canonical_sorted(unit_vec(basis.dim, i + 1) for i in range(basis.dim))
        if basis.gens != free:
            return False
        k = len(d.I3)
        for r in rows:
            if frozenset(j for j in range(k) if r[j]) != frozenset(range(k)):
                return False
    return True

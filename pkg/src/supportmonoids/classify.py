"""Decision procedures: is every member of the glued monoid a sum of a
finite member and an inf-scaled finite member?

For the monoids arising from one-dimensional situations this is the
question "is every pure-projective a direct sum of finitely generated
modules", and the answer is yes exactly when the glued monoid equals
A + inf·A for its finite part A.  The workhorse criterion compares the
extracted supports against the supports of the finite part and checks
that the finite part projects onto everything at each minimal nonempty
support; together these say precisely that the monoid is A + inf·A
*and* its system of supports is almost-free.  Witnesses are members
that provably lie outside A + inf·A.

For a single equation a·t = b·t there is a closed form: positive
solutions exist iff a - b changes sign; the system of supports is
almost-free iff supp(a) ∪ supp(b) covers everything; and (for
primitive data) the monoid is A + inf·A iff additionally the supports
of a and b are disjoint and gcd(a_i, b_j) = 1 across them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .equations import DioSystem, is_member
from .hilbert import find_order_unit, in_generated
from .semiring import (canonical_sorted, inject, supp, unit_vec, vec_to_json,
                       zero_vec)
from .supports import (SystemOfSupports, extract, is_almost_free, is_full,
                       minimal_nonempty)


@dataclass(frozen=True)
class ClassReport:
    """Aggregate answer for one defining system.

    ``full`` and ``almost_free`` are bounded verifications up to
    ``verification_bound``.  ``all_fg_sums`` restates
    ``equals_a_plus_inf_a`` in module language.  ``witnesses`` lists
    members provably outside A + inf·A, canonically sorted (so the
    first is the canonically smallest found); it can only be nonempty
    when ``equals_a_plus_inf_a`` is False.
    """

    has_order_unit: bool
    full: bool | None
    almost_free: bool | None
    equals_a_plus_inf_a: bool | None
    all_fg_sums: bool | None
    witnesses: tuple
    verification_bound: int

    def to_json(self) -> dict:
        return {
            "order_unit": self.has_order_unit,
            "full": self.full,
            "almost_free": self.almost_free,
            "equals_a_plus_inf_a": self.equals_a_plus_inf_a,
            "all_fg_sums": self.all_fg_sums,
            "witnesses": [vec_to_json(w) for w in self.witnesses],
            "verification_bound": self.verification_bound,
        }


def equals_a_plus_inf_a(sys: DioSystem, sos: SystemOfSupports | None = None):
    """Decide B = A + inf·A (with B almost-free), returning (flag, witnesses).

    Checks, on the extracted system of supports:
      * the support sets equal the supports of members of the finite
        part (unions of its generator supports, plus the empty set);
      * at every minimal nonempty support, the projected finite part
        generates every unit vector.
    Both hold iff the monoid is A + inf·A and almost-free.  Witness
    candidates come from supports outside the finite support set
    (inject zero), from missing unit vectors (inject them), and from
    family generators not generated by the projected finite part; each
    candidate is kept only if it provably lies in B and outside
    A + inf·A, so the list can be empty in the degenerate case where
    B = A + inf·A without being almost-free.
    """
    if sos is None:
        sos = extract(sys)
    s = sos.s
    gens0 = sos.basis_for(frozenset()).gens
    suppset = {frozenset()}
    frontier = [supp(g) for g in gens0]
    for H in frontier:
        suppset.add(H)
    changed = True
    while changed:
        changed = False
        for H in list(suppset):
            for K in frontier:
                if (H | K) not in suppset:
                    suppset.add(H | K)
                    changed = True

    witnesses = set()
    cond_supports = sos.S == frozenset(suppset)
    for H in sos.S - frozenset(suppset):
        # inf exactly on H is a member but its infinite support is not a
        # support of the finite part, so it cannot be a1 + inf·a2
        witnesses.add(inject(zero_vec(s - len(H)), H))

    cond_projections = True
    for H in minimal_nonempty(sos.S):
        keep = sos.complement(H)
        k = len(keep)
        if k == 0:
            continue
        projected = [tuple(g[i - 1] for i in keep) for g in gens0]
        projected = [p for p in projected if any(p)]
        for j in range(k):
            e = unit_vec(k, j + 1)
            if not in_generated(projected, e):
                cond_projections = False
                w = inject(e, H)
                if is_member(sys, w):
                    witnesses.add(w)

    flag = cond_supports and cond_projections
    if not flag and not witnesses:
        # exhaustive pass: any family generator outside the projected
        # finite part lifts to a genuine member of B \ (A + inf·A)
        for H, basis in sos.families:
            if not H:
                continue
            keep = sos.complement(H)
            projected = [p for p in
                         (tuple(g[i - 1] for i in keep) for g in gens0) if any(p)]
            for g in basis.gens:
                if not in_generated(projected, g):
                    witnesses.add(inject(g, H))
    return flag, canonical_sorted(witnesses)


@dataclass(frozen=True)
class SingleEquationReport:
    """Closed-form answers for one equation a·t = b·t.

    ``closed_form_applicable`` is False when gcd of all entries
    exceeds 1; the A + inf·A criterion is then left undecided (None)
    and only the general pathway applies.
    """

    has_positive_solution: bool
    almost_free: bool | None
    equals_a_plus_inf_a: bool | None
    closed_form_applicable: bool

    def to_json(self) -> dict:
        return {
            "has_positive_solution": self.has_positive_solution,
            "almost_free": self.almost_free,
            "equals_a_plus_inf_a": self.equals_a_plus_inf_a,
            "closed_form_applicable": self.closed_form_applicable,
        }


def analyze_single_equation(a, b) -> SingleEquationReport:
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    for v in a + b:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ValueError(f"coefficients must be nonnegative integers, got {v!r}")
    if not any(a) or not any(b):
        raise ValueError("both coefficient vectors must be nonzero")
    if a == b:
        raise ValueError("the two sides must differ")
    s = len(a)
    positive = any(x > y for x, y in zip(a, b)) and any(x < y for x, y in zip(a, b))
    almost_free = None
    equals = None
    primitive = math.gcd(*(a + b)) == 1
    if positive:
        almost_free = supp(a) | supp(b) == frozenset(range(1, s + 1))
        if primitive:
            disjoint = not (supp(a) & supp(b))
            all_positive = all(x + y > 0 for x, y in zip(a, b))
            coprime = all(math.gcd(a[i - 1], b[j - 1]) == 1
                          for i in supp(a) for j in supp(b))
            equals = all_positive and disjoint and coprime
    return SingleEquationReport(
        has_positive_solution=positive,
        almost_free=almost_free,
        equals_a_plus_inf_a=equals,
        closed_form_applicable=primitive,
    )


def verdict(sys: DioSystem, bound: int = 5) -> ClassReport:
    """Full classification of one defining system.

    A missing order-unit is reported in-band (all structural fields
    None).  For single-equation systems the closed form is computed as
    well and any disagreement with the general pathway is an internal
    error.
    """
    unit = find_order_unit(sys)
    if unit is None:
        return ClassReport(
            has_order_unit=False, full=None, almost_free=None,
            equals_a_plus_inf_a=None, all_fg_sums=None, witnesses=(),
            verification_bound=bound)
    sos = extract(sys)
    full = is_full(sos, bound)
    almost_free = is_almost_free(sos, bound)
    equals, witnesses = equals_a_plus_inf_a(sys, sos)
    report = ClassReport(
        has_order_unit=True, full=full, almost_free=almost_free,
        equals_a_plus_inf_a=equals, all_fg_sums=equals,
        witnesses=witnesses, verification_bound=bound)
    _crosscheck_single_equation(sys, report)
    return report


def _crosscheck_single_equation(sys: DioSystem, report: ClassReport) -> None:
    if sys.n_eq != 1 or sys.n_cg != 0:
        return
    a, b = sys.F[0], sys.G[0]
    if a == b or not any(a) or not any(b):
        return
    closed = analyze_single_equation(a, b)
    if not closed.has_positive_solution:
        return
    if closed.almost_free != report.almost_free:
        raise RuntimeError(
            f"single-equation closed form disagrees on almost_free for {a} = {b}")
    if closed.closed_form_applicable and \
            closed.equals_a_plus_inf_a != report.equals_a_plus_inf_a:
        raise RuntimeError(
            f"single-equation closed form disagrees on A+inf·A for {a} = {b}")

"""Independent brute-force evaluators the library is checked against.

Everything here is deliberately written from scratch: infinity is the
Python value None, evaluation walks the matrices directly, and closures
are plain breadth-first searches.  Nothing imports the library's
arithmetic, so agreement between the two paths is meaningful.
"""

import itertools


def o_row_value(row, x):
    """row · x with None as infinity (coefficients are plain ints >= 0)."""
    total = 0
    for c, v in zip(row, x):
        if c == 0:
            continue
        if v is None:
            return None
        total += c * v
    return total


def o_is_member(sysdict, x):
    eq = sysdict.get("equations") or {}
    cg = sysdict.get("congruences") or {}
    for f, g in zip(eq.get("F", ()), eq.get("G", ())):
        if o_row_value(f, x) != o_row_value(g, x):
            return False
    for d, m in zip(cg.get("D", ()), cg.get("moduli", ())):
        v = o_row_value(d, x)
        if v is not None and v % m != 0:
            return False
    return True


def o_domain(s, bound):
    values = tuple(range(bound + 1)) + (None,)
    return itertools.product(values, repeat=s)


def o_solutions(sysdict, bound):
    """All truncated solutions, infinity encoded as None."""
    return {x for x in o_domain(sysdict["s"], bound) if o_is_member(sysdict, x)}


def o_finite_solutions(sysdict, bound):
    return {x for x in o_solutions(sysdict, bound) if None not in x}


def o_minimal(vectors):
    """Inclusion-minimal nonzero elements under the componentwise order."""
    nonzero = [v for v in vectors if any(v)]
    return {v for v in nonzero
            if not any(w != v and all(a <= b for a, b in zip(w, v)) for w in nonzero)}


def o_add(x, y):
    return tuple(None if (a is None or b is None) else a + b for a, b in zip(x, y))


def o_inf_scale(x):
    return tuple(None if v != 0 else 0 for v in x)


def o_in_box(x, bound):
    return all(v is None or v <= bound for v in x)


def o_closure(gens, bound, s):
    """Truncated closure of {0} under adding g and adding inf·g."""
    moves = []
    for g in gens:
        moves.append(tuple(g))
        moves.append(o_inf_scale(g))
    seen = {(0,) * s}
    frontier = [(0,) * s]
    while frontier:
        nxt = []
        for t in frontier:
            for g in moves:
                t2 = o_add(t, g)
                if t2 in seen or not o_in_box(t2, bound):
                    continue
                seen.add(t2)
                nxt.append(t2)
        frontier = nxt
    return seen


def o_finite_closure(gens, bound, s):
    """Truncated closure under plain addition of all-finite generators."""
    seen = {(0,) * s}
    frontier = [(0,) * s]
    while frontier:
        nxt = []
        for t in frontier:
            for g in gens:
                t2 = tuple(a + b for a, b in zip(t, g))
                if t2 in seen or any(v > bound for v in t2):
                    continue
                seen.add(t2)
                nxt.append(t2)
        frontier = nxt
    return seen


def o_a_plus_inf_a(finite_members, bound):
    """{a1 + inf·a2} over a finite member set, kept inside the box."""
    out = set()
    for a1 in finite_members:
        for a2 in finite_members:
            z = o_add(a1, o_inf_scale(a2))
            if o_in_box(z, bound):
                out.add(z)
    return out


# converters at the oracle/library boundary

def from_lib(x, INF):
    return tuple(None if v is INF else v for v in x)


def to_lib(x, INF):
    return tuple(INF if v is None else v for v in x)

"""Brute-force reference implementations.

Nothing here uses the Hermite/Smith subgroup calculus for the computation
itself: elements are enumerated and closed by hand, so a bug in the main path
cannot certify itself.  Results are packaged as :class:`Subgroup` only after
checking that the element set really has the claimed size.
"""
from .blocks import Verdict
from .config import get_cap
from .errors import InvariantViolation, TooLarge
from .ring import enumerate_elements
from .structure import central_idempotents, center, jacobson_radical
from .subgroup import Subgroup


def _cap(value, name, cap=None):
    limit = get_cap(name) if cap is None else cap
    if value > limit:
        raise TooLarge(value, limit, name)


def _as_subgroup(r, elements):
    s = Subgroup(r, list(elements))
    if s.size != len(elements):
        raise InvariantViolation("brute-force element set is not a subgroup")
    return s


def _elements(r):
    return list(enumerate_elements(r))


def _group_closure(r, gens):
    """Additive subgroup generated by ``gens`` as a frozenset (breadth-first)."""
    seen = {r.zero}
    frontier = [r.zero]
    gens = [g for g in gens if any(g)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = r.add(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def _right_cyclic(r, x, els):
    return frozenset(r.mul(x, y) for y in els)


def right_ideals(r, cap=None):
    """Every right ideal of r as frozensets (the whole ring included).

    Each right ideal is a sum of principal ones, so growing from the principal
    ideals by adding one principal ideal at a time reaches all of them.
    """
    _cap(r.size, "oracle_radical", cap)
    if "brute_right_ideals" in r._memo:
        return r._memo["brute_right_ideals"]
    els = _elements(r)
    principal = sorted({_right_cyclic(r, x, els) for x in els}, key=len)
    seen = set(principal)
    stack = list(principal)
    while stack:
        m = stack.pop()
        for p in principal:
            if p <= m:
                continue
            bigger = frozenset(r.add(a, b) for a in m for b in p)
            if bigger not in seen:
                seen.add(bigger)
                stack.append(bigger)
    out = sorted(seen, key=lambda s: (len(s), sorted(s)))
    r._memo["brute_right_ideals"] = out
    return out


def maximal_right_ideals(r, cap=None):
    ideals = right_ideals(r, cap)
    whole = ideals[-1]
    proper = [m for m in ideals if m != whole]
    return [m for m in proper if not any(m < other for other in proper)]


def brute_radical(r, cap=None):
    """Intersection of all maximal right ideals."""
    if "brute_radical" not in r._memo:
        maxi = maximal_right_ideals(r, cap)
        inter = frozenset(_elements(r))
        for m in maxi:
            inter &= m
        r._memo["brute_radical"] = _as_subgroup(r, inter)
    return r._memo["brute_radical"]


def brute_central_idempotents(r, cap=None):
    _cap(r.size, "oracle_radical", cap)
    basis = [r.basis(i) for i in range(r.rank)]
    return [x for x in enumerate_elements(r)
            if r.mul(x, x) == x and all(r.mul(x, b) == r.mul(b, x) for b in basis)]


def brute_socle(r, m, cap=None):
    """Sum of the minimal right submodules of the right module ``m``."""
    _cap(m.size, "oracle_socle", cap)
    els = _elements(r)
    members = [x for x in m.elements()]
    cyclic = {x: _right_cyclic(r, x, els) for x in members if any(x)}
    minimal = {c for x, c in cyclic.items() if all(cyclic[y] == c for y in c if any(y))}
    gens = [y for c in minimal for y in c]
    return _as_subgroup(r, _group_closure(r, gens))


# -- extensions of simple modules ----------------------------------------------

def brute_ext_nonsplit(r, i, j, ring_cap=None, module_cap=None):
    """True iff some right module M has a submodule N with N ~ S_j, M/N ~ S_i
    and no complement to N.

    A non-split M is generated by any element outside N, so M = R/K for a
    right ideal K, and its only proper nonzero submodule is N.  The search
    runs over all right ideals K with |R/K| = s_i s_j and exactly one right
    ideal L strictly between K and R; S_i ~ R/L iff R e_i is not inside L, and
    S_j ~ L/K iff L e_j is not inside K.
    """
    from .simples import _cls
    ci, cj = _cls(r, i), _cls(r, j)
    _cap(r.size, "oracle_ring", ring_cap)
    _cap(ci.size * cj.size, "oracle_module", module_cap)
    ideals = right_ideals(r)
    whole = ideals[-1]
    target = ci.size * cj.size
    for K in ideals:
        if len(whole) != target * len(K):
            continue
        middle = [L for L in ideals if K < L < whole]
        if len(middle) != 1:
            continue
        L = middle[0]
        if len(L) != cj.size * len(K):
            continue
        tops = any(r.mul(x, ci.idempotent) not in L for x in whole)
        socs = any(r.mul(x, cj.idempotent) not in K for x in L)
        if tops and socs:
            return True
    return False


# -- equivalence report ----------------------------------------------------------

def _skipped(name, exc):
    return Verdict(name, True, None, f"skipped: {exc}")


def oracle_report(r):
    """Main-path results against the brute-force oracles; one Verdict per check."""
    from .simples import ext_nonzero, simple_classes
    from .qf import right_socle_of_projective
    out = []
    try:
        brute = brute_radical(r)
        main = jacobson_radical(r)
        out.append(Verdict("oracle_radical", brute == main,
                           None if brute == main else {"main": main.size, "brute": brute.size}))
    except TooLarge as exc:
        out.append(_skipped("oracle_radical", exc))
    try:
        brute = sorted(brute_central_idempotents(r))
        main = sorted(central_idempotents(r, center(r)).all)
        out.append(Verdict("oracle_central_idempotents", brute == main,
                           None if brute == main else {"main": main, "brute": brute}))
    except TooLarge as exc:
        out.append(_skipped("oracle_central_idempotents", exc))
    try:
        bad = []
        for c in simple_classes(r):
            from .subgroup import principal_right_ideal
            module = principal_right_ideal(r, c.idempotent)
            if brute_socle(r, module) != right_socle_of_projective(r, c.idempotent):
                bad.append(c.id)
        out.append(Verdict("oracle_socles", not bad, {"classes": bad} if bad else None))
    except TooLarge as exc:
        out.append(_skipped("oracle_socles", exc))
    try:
        bad = []
        classes = simple_classes(r)
        for ci in classes:
            for cj in classes:
                if brute_ext_nonsplit(r, ci, cj) != ext_nonzero(r, ci, cj):
                    bad.append([ci.id, cj.id])
        out.append(Verdict("oracle_ext", not bad, {"pairs": bad} if bad else None))
    except TooLarge as exc:
        out.append(_skipped("oracle_ext", exc))
    return out

"""Additive subgroups of a finite ring, ideals, quotients and subrings."""
from . import abelian
from .errors import AmbientMismatch, NotAnIdeal
from .ring import FiniteRing, check_cap


class Subgroup:
    """Additive subgroup of ``ring`` with a canonical Hermite basis.

    Two subgroups of the same ring are equal iff their canonical forms agree,
    which also makes them hashable.
    """

    def __init__(self, ring, gens):
        self.ring = ring
        self.canonical = abelian.hermite_mod(ring.orders, gens)
        # the nonzero Hermite rows generate; keep them reduced as the generator list
        self.generators = tuple(
            ring.reduce(row) for i, row in enumerate(self.canonical)
            if row[i] != ring.orders[i]
        )
        self.size = abelian.hermite_size(ring.orders, self.canonical)

    def __contains__(self, x):
        return abelian.hermite_contains(self.canonical, x)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        # equality of subsets of the same additive group
        return self.ring.orders == other.ring.orders and self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __le__(self, other):
        _same_ring(self, other)
        return all(g in other for g in self.generators)

    def __lt__(self, other):
        return self <= other and self.size < other.size

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"<Subgroup of size {self.size}>"

    def is_zero(self):
        return self.size == 1

    def elements(self):
        """Elements in lexicographic order."""
        check_cap(self.size)
        return sorted(abelian.hermite_elements(self.ring.orders, self.canonical))

    def presentation(self):
        return abelian.SubgroupPresentation(self.ring.orders, self.canonical)


def _same_ring(s, t):
    if s.ring is not t.ring and s.ring != t.ring:
        raise AmbientMismatch("subgroups live in different rings")


def subgroup(r, gens=()):
    return Subgroup(r, [r.reduce(g) for g in gens])


def whole(r):
    return Subgroup(r, [r.basis(i) for i in range(r.rank)])


def zero(r):
    return Subgroup(r, [])


def sg_contains(s, x):
    return x in s


def sg_sum(s, t):
    _same_ring(s, t)
    return Subgroup(s.ring, s.generators + t.generators)


def sg_intersect(s, t):
    _same_ring(s, t)
    return Subgroup(s.ring, abelian.intersect_mod(s.ring.orders, s.generators, t.generators))


def sg_equal(s, t):
    _same_ring(s, t)
    return s.canonical == t.canonical


def sg_size(s):
    return s.size


def sg_product(s, t):
    """Additive span of all products x*y; generator products suffice by bilinearity."""
    _same_ring(s, t)
    r = s.ring
    return Subgroup(r, [r.mul(x, y) for x in s.generators for y in t.generators])


def image(s, fn):
    """Image of an additive map under which ``fn`` is evaluated on generators."""
    return Subgroup(s.ring, [fn(g) for g in s.generators])


def preimage(s, fn, target):
    """{ x in s : fn(x) in target } for an additive map ``fn`` of the ring."""
    r = s.ring
    images = [fn(r.basis(a)) for a in range(r.rank)]
    gens = abelian.preimage_mod(r.orders, s.generators, images, target.ring.orders, target.generators)
    return Subgroup(r, gens)


def kernel_of(s, fns):
    """{ x in s : f(x) == 0 for every additive map f in ``fns`` } (maps into ``s.ring``)."""
    r = s.ring
    k = r.rank
    m = len(fns)
    if m == 0:
        return s
    images = []
    for a in range(k):
        b = r.basis(a)
        img = ()
        for f in fns:
            img += f(b)
        images.append(img)
    gens = abelian.preimage_mod(r.orders, s.generators, images, r.orders * m, ())
    return Subgroup(r, gens)


def right_ideal_closure(r, gens):
    return ideal(r, gens, "right")


def ideal(r, gens, side="two-sided"):
    """Smallest subgroup containing ``gens`` closed under the requested multiplications."""
    if side not in ("left", "right", "two-sided"):
        raise ValueError(f"side must be left, right or two-sided, not {side!r}")
    basis = [r.basis(i) for i in range(r.rank)]
    s = subgroup(r, gens)
    while True:
        new = []
        for g in s.generators:
            for b in basis:
                if side in ("right", "two-sided"):
                    new.append(r.mul(g, b))
                if side in ("left", "two-sided"):
                    new.append(r.mul(b, g))
        grown = Subgroup(r, list(s.generators) + new)
        if grown.size == s.size:
            return s
        s = grown


def is_two_sided_ideal(s):
    r = s.ring
    for g in s.generators:
        for i in range(r.rank):
            b = r.basis(i)
            if r.mul(g, b) not in s:
                return False, (g, b)
            if r.mul(b, g) not in s:
                return False, (b, g)
    return True, None


def principal_right_ideal(r, x):
    """xR as the span of x*b_i (R is unital)."""
    return Subgroup(r, [r.mul(x, r.basis(i)) for i in range(r.rank)])


def principal_left_ideal(r, x):
    return Subgroup(r, [r.mul(r.basis(i), x) for i in range(r.rank)])


def corner(r, e, f=None):
    """eRf as a subgroup."""
    f = e if f is None else f
    return Subgroup(r, [r.mul(r.mul(e, r.basis(i)), f) for i in range(r.rank)])


class Projection:
    """Ring homomorphism R -> R/I in coordinates, with a fixed section."""

    def __init__(self, source, target, presentation):
        self.source = source
        self.target = target
        self._pres = presentation

    def __call__(self, x):
        return self._pres.project(x)

    def lift(self, y):
        return self._pres.lift(y)


def quotient_ring(r, i):
    """R/I on the Smith basis of the quotient group, plus the projection."""
    ok, witness = is_two_sided_ideal(i)
    if not ok:
        raise NotAnIdeal(witness)
    pres = abelian.QuotientPresentation(r.orders, i.canonical)
    lifts = pres.generators
    m = len(pres.orders)
    if m == 0:
        raise NotAnIdeal("the whole ring (quotient would be the zero ring)")
    mul = tuple(tuple(pres.project(r.mul(lifts[a], lifts[b])) for b in range(m)) for a in range(m))
    name = f"{r.name}/I" if r.name else None
    q = FiniteRing(pres.orders, pres.project(r.one), mul, name=name)
    proj = Projection(r, q, pres)
    for a in range(r.rank):
        x = r.basis(a)
        for b in range(r.rank):
            y = r.basis(b)
            if proj(r.mul(x, y)) != q.mul(proj(x), proj(y)):
                raise NotAnIdeal((x, y))
    return q, proj


class Inclusion:
    """Embedding of a subring built by :func:`subring` back into the ambient ring."""

    def __init__(self, source, target, presentation):
        self.source = source
        self.target = target
        self._pres = presentation

    def __call__(self, y):
        return self._pres.element(y)

    def coords(self, x):
        return self._pres.coords(x)


def subring(r, s, one, name=None):
    """The ring on subgroup ``s`` (closed under mul) with identity ``one``.

    Used for corner rings eRe and block rings cR.
    """
    pres = s.presentation()
    gens = pres.generators
    m = len(pres.orders)
    mul = tuple(tuple(pres.coords(r.mul(gens[a], gens[b])) for b in range(m)) for a in range(m))
    from .ring import make_ring
    sub = make_ring(pres.orders, pres.coords(one), mul, name=name)
    return sub, Inclusion(sub, r, pres)

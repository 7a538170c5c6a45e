"""Radical and idempotent structure of a finite ring."""
from collections import namedtuple
from dataclasses import dataclass

import numpy as np

from . import abelian
from .errors import ClassificationAmbiguous, InvariantViolation, NotIdempotentModJ
from .ring import check_cap, unit_mask
from .subgroup import (
    Subgroup, corner, kernel_of, principal_right_ideal, quotient_ring, sg_product, whole,
)


def _memo(r, key, compute):
    if key not in r._memo:
        r._memo[key] = compute()
    return r._memo[key]


def exact_log(value, base):
    """m with base**m == value; raise InvariantViolation otherwise."""
    if base < 2 or value < 1:
        raise InvariantViolation(f"log of {value} to base {base}")
    m, acc = 0, 1
    while acc < value:
        acc *= base
        m += 1
    if acc != value:
        raise InvariantViolation(f"{value} is not a power of {base}")
    return m


def exact_root(value, n):
    root = round(value ** (1.0 / n))
    for cand in (root - 1, root, root + 1):
        if cand >= 1 and cand ** n == value:
            return cand
    raise InvariantViolation(f"{value} is not an exact {n}-th power")


def _is_prime(n):
    return n >= 2 and all(n % f for f in range(2, int(n ** 0.5) + 1))


def _is_prime_power_of(q, p):
    while q % p == 0:
        q //= p
    return q == 1


# -- radical -----------------------------------------------------------------

def _span(r, elements):
    """Subgroup spanned by an iterable of elements, adding only new ones."""
    s = Subgroup(r, [])
    for x in elements:
        if x not in s:
            s = Subgroup(r, list(s.generators) + [x])
    return s


def jacobson_radical(r):
    """{ x : 1 - r*x is a unit for every r }, by a full element scan."""
    def compute():
        check_cap(r.size, "radical_scan")
        units = unit_mask(r)
        els = r.element_array()
        one = np.asarray(r.one, dtype=np.int64)
        members = []
        for n in range(r.size):
            x = els[n]
            rx = r.reduce_array(one - els @ r.right_matrix(x))
            if units[r.index_of(rx)].all():
                members.append(tuple(int(c) for c in x))
        return _span(r, members)
    return _memo(r, "radical", compute)


@dataclass
class RadicalFiltration:
    powers: list
    index: int

    def __getitem__(self, t):
        if t >= len(self.powers):
            return self.powers[-1]
        return self.powers[t]

    @property
    def radical(self):
        return self[1]


def radical_filtration(r):
    """R = J^0 > J^1 > ... > J^n = 0."""
    def compute():
        J = jacobson_radical(r)
        powers = [whole(r), J]
        while not powers[-1].is_zero():
            nxt = sg_product(powers[-1], J)
            if nxt.size == powers[-1].size:
                raise InvariantViolation("radical is not nilpotent")
            powers.append(nxt)
        if whole(r).size == J.size:
            raise InvariantViolation("radical equals the whole ring")
        return RadicalFiltration(powers, len(powers) - 1)
    return _memo(r, "filtration", compute)


# -- center and idempotents --------------------------------------------------

def center(r):
    def compute():
        basis = [r.basis(i) for i in range(r.rank)]
        fns = [(lambda z, b=b: r.sub(r.mul(z, b), r.mul(b, z))) for b in basis]
        z = kernel_of(whole(r), fns)
        if r.one not in z:
            raise InvariantViolation("center does not contain 1")
        for a in z.generators:
            for b in z.generators:
                if r.mul(a, b) not in z:
                    raise InvariantViolation("center is not closed under multiplication")
        return z
    return _memo(r, "center", compute)


CentralIdempotents = namedtuple("CentralIdempotents", "all primitive")


def central_idempotents(r, within=None):
    """All idempotents of ``within`` (default: the center), and the primitive ones.

    ``within`` must consist of central elements.
    """
    within = center(r) if within is None else within
    idem = [x for x in within.elements() if r.mul(x, x) == x]
    nonzero = [x for x in idem if any(x)]
    primitive = []
    for x in nonzero:
        split = False
        for y in nonzero:
            if y == x:
                continue
            z = r.sub(x, y)
            if any(z) and z in nonzero and not any(r.mul(y, z)) and not any(r.mul(z, y)):
                split = True
                break
        if not split:
            primitive.append(x)
    return CentralIdempotents(idem, primitive)


def idempotent_lift(r, x, modulo=None):
    """Exact idempotent congruent to x mod J via e <- 3e^2 - 2e^3."""
    filt = radical_filtration(r) if modulo is None else modulo
    J = filt.radical
    if r.sub(r.mul(x, x), x) not in J:
        raise NotIdempotentModJ(f"{x} is not idempotent modulo the radical")
    e = x
    for _ in range(filt.index + 2):
        e2 = r.mul(e, e)
        if e2 == e:
            return e
        e3 = r.mul(e2, e)
        e = r.sub(r.scale(3, e2), r.scale(2, e3))
    raise InvariantViolation("idempotent lifting did not converge")


def semisimple_quotient(r):
    def compute():
        q, proj = quotient_ring(r, jacobson_radical(r))
        if not jacobson_radical(q).is_zero():
            raise InvariantViolation("R/J has a nonzero radical")
        return q, proj
    return _memo(r, "semisimple_quotient", compute)


# -- Wedderburn data ----------------------------------------------------------

@dataclass
class WedderburnBlock:
    idempotent: tuple      # primitive central idempotent f_j of R/J (quotient coordinates)
    lift: tuple            # a preimage of f_j in R
    block_size: int        # |f_j (R/J)|
    simple_size: int       # s_j
    multiplicity: int      # mu_j
    field_order: int       # q_j
    characteristic: int    # p_j


@dataclass
class WedderburnData:
    blocks: list
    quotient_size: int

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, j):
        return self.blocks[j]


def _minimal_right_ideal_size(q, block, floor):
    best = None
    for x in block.elements():
        if not any(x):
            continue
        size = principal_right_ideal(q, x).size
        if best is None or size < best:
            best = size
            if best == floor:
                break
    return best


def wedderburn_data(r):
    """Blocks of R/J ~ prod M_mu(F_q), with s = q**mu the simple-module size."""
    def compute():
        q, proj = semisimple_quotient(r)
        J = jacobson_radical(r)
        blocks = []
        for f in central_idempotents(q).primitive:
            block = principal_right_ideal(q, f)
            p = abelian.element_order(f, q.orders)
            if not _is_prime(p):
                raise InvariantViolation(f"block idempotent has non-prime additive order {p}")
            s = _minimal_right_ideal_size(q, block, p)
            mu = exact_log(block.size, s)
            fq = exact_root(s, mu)
            if not _is_prime_power_of(fq, p):
                raise InvariantViolation(f"endomorphism field order {fq} is not a power of {p}")
            blocks.append(WedderburnBlock(f, proj.lift(f), block.size, s, mu, fq, p))

        def key(b):
            first = next(i for i in range(r.rank) if r.mul(b.lift, r.basis(i)) not in J)
            return (first, b.characteristic, b.simple_size, b.lift)
        blocks.sort(key=key)
        total = 1
        for b in blocks:
            total *= b.block_size
        if total != q.size:
            raise InvariantViolation("block sizes do not multiply to |R/J|")
        return WedderburnData(blocks, q.size)
    return _memo(r, "wedderburn", compute)


# -- local idempotents ---------------------------------------------------------

@dataclass
class LocalIdempotentSet:
    idempotents: list
    classes: list          # 1-based Wedderburn block id of each idempotent

    def of_class(self, j):
        return [e for e, c in zip(self.idempotents, self.classes) if c == j]


def is_local_idempotent(r, e):
    if not any(e) or r.mul(e, e) != e:
        return False
    return sum(1 for x in corner(r, e).elements() if r.mul(x, x) == x) == 2


def classify_idempotent(r, e):
    J = jacobson_radical(r)
    hits = [j for j, b in enumerate(wedderburn_data(r), start=1) if r.mul(e, b.lift) not in J]
    if len(hits) != 1:
        raise ClassificationAmbiguous(f"idempotent {e} meets blocks {hits}")
    return hits[0]


def primitive_orthogonal_decomposition(r):
    """Orthogonal local idempotents summing to 1, lexicographically least first."""
    def compute():
        u = r.one
        found = []
        while any(u):
            pick = None
            for x in corner(r, u).elements():
                if any(x) and r.mul(x, x) == x and is_local_idempotent(r, x):
                    pick = x
                    break
            if pick is None:
                raise InvariantViolation("no local idempotent in a nonzero corner")
            found.append(pick)
            u = r.sub(u, pick)
        classes = [classify_idempotent(r, e) for e in found]
        for j, b in enumerate(wedderburn_data(r), start=1):
            if classes.count(j) != b.multiplicity:
                raise InvariantViolation(
                    f"class {j}: {classes.count(j)} local idempotents, multiplicity {b.multiplicity}")
        return LocalIdempotentSet(found, classes)
    return _memo(r, "local_idempotents", compute)


def projective_cover(r, e):
    """eR, the indecomposable projective with top eR/eJ."""
    return principal_right_ideal(r, e)

"""Builders for standard families of finite rings.

Every builder returns a ring that has passed :func:`make_ring` validation.
Matrix-like rings, group algebras and path algebras are all produced as a
tensor product of an integral "shape" algebra (matrix units, group elements,
paths) with a base ring, the base basis varying fastest.
"""
import itertools
from dataclasses import dataclass

from .errors import InvalidGroupTable, NotAdmissible, NotFiniteDimensional
from .ring import make_ring

# Monic irreducible polynomials over F_p, coefficients lowest degree first
# (Conway polynomials where they are short).  Keyed by (p, degree).
IRREDUCIBLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}


def prime_power(q):
    """Return (p, n) with q == p**n, or None."""
    if q < 2:
        return None
    p = 2
    while q % p:
        p += 1
    n = 0
    while q % p == 0:
        q //= p
        n += 1
    return (p, n) if q == 1 else None


def _tensor(m, products, one, base, name):
    """Ring A (x) base where A has basis a_0..a_{m-1}.

    ``products[s][t]`` is a list of (u, coeff) with a_s a_t = sum coeff * a_u.
    """
    k = base.rank
    orders = list(base.orders) * m
    n = m * k
    zero = [0] * n
    mul = [[None] * n for _ in range(n)]
    for s in range(m):
        for i in range(k):
            for t in range(m):
                for j in range(k):
                    v = list(zero)
                    bij = base.mul_table[i][j]
                    for u, coeff in products[s][t]:
                        for c, w in enumerate(bij):
                            if w:
                                v[u * k + c] += coeff * w
                    mul[s * k + i][t * k + j] = v
    unit = list(zero)
    for u, coeff in one:
        for c, w in enumerate(base.one):
            unit[u * k + c] += coeff * w
    return make_ring(orders, unit, mul, name=name)


def zmod(n):
    if n < 2:
        raise ValueError("zmod needs n >= 2")
    return make_ring([n], [1], [[[1]]], name=f"Z{n}")


def finite_field(q):
    """F_q as F_p[x]/(f) with f taken from :data:`IRREDUCIBLE`."""
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    p, n = pp
    if n == 1:
        return zmod(p)
    try:
        f = IRREDUCIBLE[(p, n)]
    except KeyError:
        raise ValueError(f"no irreducible polynomial tabulated for F_{q}") from None
    # x^n = -(f_0 + ... + f_{n-1} x^{n-1})
    powers = {}
    for e in range(2 * n - 1):
        if e < n:
            v = [0] * n
            v[e] = 1
        else:
            prev = powers[e - 1]
            top = prev[n - 1]
            v = [0] + prev[:n - 1]
            for c in range(n):
                v[c] = (v[c] - top * f[c]) % p
        powers[e] = v
    mul = [[powers[i + j] for j in range(n)] for i in range(n)]
    return make_ring([p] * n, [1] + [0] * (n - 1), mul, name=f"F{q}")


def matrix_ring(base, n):
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    products = [[[] for _ in range(n * n)] for _ in range(n * n)]
    for a, b, c, d in itertools.product(range(n), repeat=4):
        if b == c:
            products[a * n + b][c * n + d] = [(a * n + d, 1)]
    one = [(a * n + a, 1) for a in range(n)]
    return _tensor(n * n, products, one, base, name=f"M{n}({base.name})")


def upper_triangular(base, n):
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    units = [(a, b) for a in range(n) for b in range(a, n)]
    index = {u: s for s, u in enumerate(units)}
    m = len(units)
    products = [[[] for _ in range(m)] for _ in range(m)]
    for (a, b), s in index.items():
        for (c, d), t in index.items():
            if b == c:
                products[s][t] = [(index[(a, d)], 1)]
    one = [(index[(a, a)], 1) for a in range(n)]
    return _tensor(m, products, one, base, name=f"T{n}({base.name})")


def direct_product(a, b):
    ka, kb = a.rank, b.rank
    n = ka + kb
    mul = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(ka):
        for j in range(ka):
            mul[i][j][:ka] = a.mul_table[i][j]
    for i in range(kb):
        for j in range(kb):
            mul[ka + i][ka + j][ka:] = b.mul_table[i][j]
    return make_ring(list(a.orders) + list(b.orders), list(a.one) + list(b.one), mul,
                     name=f"{a.name}x{b.name}")


@dataclass(frozen=True)
class GroupTable:
    """Cayley table of a finite group; elements are 0..order-1."""
    order: int
    table: tuple
    identity: int = 0

    def __post_init__(self):
        n = self.order
        t = self.table
        if len(t) != n or any(len(row) != n for row in t):
            raise InvalidGroupTable(f"table must be {n}x{n}")
        full = set(range(n))
        for row in t:
            if set(row) != full:
                raise InvalidGroupTable("rows must be permutations (Latin square)")
        for col in range(n):
            if {t[r][col] for r in range(n)} != full:
                raise InvalidGroupTable("columns must be permutations (Latin square)")
        e = self.identity
        if any(t[e][x] != x or t[x][e] != x for x in range(n)):
            raise InvalidGroupTable(f"element {e} is not an identity")
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise InvalidGroupTable(f"not associative at {(a, b, c)}")


def cyclic_group(n):
    return GroupTable(n, tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def symmetric_group(n):
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = q(p(x)): apply p first
    table = tuple(tuple(index[tuple(q[p[x]] for x in range(n))] for q in perms) for p in perms)
    return GroupTable(len(perms), table, index[tuple(range(n))])


def group_algebra(q, g, name=None):
    if not isinstance(g, GroupTable):
        raise InvalidGroupTable("expected a GroupTable")
    base = finite_field(q)
    n = g.order
    products = [[[(g.table[a][b], 1)] for b in range(n)] for a in range(n)]
    return _tensor(n, products, [(g.identity, 1)], base, name=name or f"F{q}[G{n}]")


@dataclass(frozen=True)
class QuiverSpec:
    """Finite quiver with relations over F_q.

    Vertices are numbered 1..vertex_count.  ``relations`` is either
    ``"rad_square_zero"`` or a list of relations, each a mapping from a path
    (tuple of 0-based arrow indices, composed left to right) to an integer
    coefficient in the prime field.  Explicit relations must be homogeneous.
    """
    vertex_count: int
    arrows: tuple
    relations: object = "rad_square_zero"
    field_order: int = 2

    def __post_init__(self):
        if self.vertex_count < 1:
            raise NotAdmissible("need at least one vertex")
        for s, t in self.arrows:
            if not (1 <= s <= self.vertex_count and 1 <= t <= self.vertex_count):
                raise NotAdmissible(f"arrow {s}->{t} leaves the vertex range")
        if prime_power(self.field_order) is None:
            raise NotAdmissible(f"field order {self.field_order} is not a prime power")


def _paths_of_length(arrows, length):
    if length == 0:
        return []
    paths = [(a,) for a in range(len(arrows))]
    for _ in range(length - 1):
        paths = [p + (a,) for p in paths for a in range(len(arrows))
                 if arrows[p[-1]][1] == arrows[a][0]]
    return sorted(paths)


def _sides(arrows, nv, length):
    """Multipliers of a given length: vertex numbers for 0, else paths."""
    if length == 0:
        return [v + 1 for v in range(nv)]
    return _paths_of_length(arrows, length)


def _compose(arrows, u, q, w):
    """The path u.q.w, or None if the pieces do not compose."""
    if isinstance(u, int):
        if arrows[q[0]][0] != u:
            return None
        u = ()
    elif arrows[u[-1]][1] != arrows[q[0]][0]:
        return None
    if isinstance(w, int):
        if arrows[q[-1]][1] != w:
            return None
        w = ()
    elif arrows[q[-1]][1] != arrows[w[0]][0]:
        return None
    return tuple(u) + tuple(q) + tuple(w)


def _rref_mod_p(rows, p):
    """Reduced row echelon form over F_p; returns (rows, pivot columns)."""
    rows = [[c % p for c in r] for r in rows]
    pivots = []
    out = []
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        sel = None
        for idx, r in enumerate(rows):
            if r[col]:
                sel = idx
                break
        if sel is None:
            continue
        r = rows.pop(sel)
        inv = pow(r[col], -1, p)
        r = [c * inv % p for c in r]
        rows = [[(c - x[col] * rc) % p for c, rc in zip(x, r)] for x in rows]
        out = [[(c - x[col] * rc) % p for c, rc in zip(x, r)] for x in out]
        out.append(r)
        pivots.append(col)
    return out, pivots


def path_algebra_mod(spec):
    """kQ/I with basis: vertex idempotents, arrows, then surviving longer paths.

    Paths compose left to right: for arrows a: u->v and b: v->w the product
    a*b is the path "a then b".
    """
    p, _ = prime_power(spec.field_order)
    arrows = [tuple(a) for a in spec.arrows]
    nv = spec.vertex_count
    na = len(arrows)
    cutoff = 2 * (nv + na)

    if spec.relations == "rad_square_zero":
        top = 2
        survivors = {1: [(a,) for a in range(na)]}
        normal = {}
    else:
        rels = [dict(rel) for rel in spec.relations]
        for rel in rels:
            lengths = {len(path) for path, c in rel.items() if c % p}
            if not lengths:
                continue
            if len(lengths) != 1:
                raise NotAdmissible("relations must be homogeneous (all paths of one length)")
            if min(lengths) < 2:
                raise NotAdmissible("relations must lie in the square of the arrow ideal")
            for path in rel:
                for x, y in zip(path, path[1:]):
                    if arrows[x][1] != arrows[y][0]:
                        raise NotAdmissible(f"{path} is not a path")
        rels = [{path: c % p for path, c in rel.items() if c % p} for rel in rels]
        rels = [rel for rel in rels if rel]
        survivors = {1: [(a,) for a in range(na)]}
        normal = {}
        top = None
        for length in range(2, cutoff + 1):
            paths = _paths_of_length(arrows, length)
            if not paths:
                top = length
                break
            col = {path: i for i, path in enumerate(paths)}
            rows = []
            for rel in rels:
                rl = len(next(iter(rel)))
                for left in range(length - rl + 1):
                    right = length - rl - left
                    for u in _sides(arrows, nv, left):
                        for w in _sides(arrows, nv, right):
                            row = [0] * len(paths)
                            for q, c in rel.items():
                                full = _compose(arrows, u, q, w)
                                if full is not None:
                                    row[col[full]] = (row[col[full]] + c) % p
                            if any(row):
                                rows.append(row)
            ech, piv = _rref_mod_p(rows, p)
            if len(piv) == len(paths):
                top = length
                break
            keep = [path for i, path in enumerate(paths) if i not in set(piv)]
            survivors[length] = keep
            for r, pc in zip(ech, piv):
                normal[paths[pc]] = [(paths[i], -c % p) for i, c in enumerate(r) if c and i != pc]
            for path in keep:
                normal[path] = [(path, 1)]
        if top is None:
            raise NotFiniteDimensional(f"paths of length {cutoff} still survive the relations")

    basis = [("v", v) for v in range(nv)]
    for length in sorted(survivors):
        basis += [("p", path) for path in survivors[length]]
    index = {b: i for i, b in enumerate(basis)}

    def reduce_path(path):
        if len(path) >= top:
            return []
        if len(path) == 1 or spec.relations == "rad_square_zero":
            return [(index[("p", path)], 1)]
        return [(index[("p", q)], c) for q, c in normal[path]]

    def src(b):
        return b[1] if b[0] == "v" else arrows[b[1][0]][0] - 1

    def tgt(b):
        return b[1] if b[0] == "v" else arrows[b[1][-1]][1] - 1

    m = len(basis)
    products = [[[] for _ in range(m)] for _ in range(m)]
    for s, x in enumerate(basis):
        for t, y in enumerate(basis):
            if tgt(x) != src(y):
                continue
            if x[0] == "v":
                products[s][t] = [(t, 1)]
            elif y[0] == "v":
                products[s][t] = [(s, 1)]
            else:
                products[s][t] = reduce_path(x[1] + y[1])
    one = [(v, 1) for v in range(nv)]
    base = finite_field(spec.field_order)
    return _tensor(m, products, one, base, name=f"kQ({nv},{na})/I over F{spec.field_order}")

"""Exact arithmetic on subgroups of G = Z/d_1 + ... + Z/d_k.

A subgroup S of G is identified with the lattice L in Z^k of all integer
vectors reducing into S; L always contains the diagonal lattice D spanned by
d_i * e_i.  Subgroups are stored through the Hermite basis of L, which is
unique and therefore serves as the canonical form.
"""
from math import gcd, prod


def xgcd(a, b):
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def hermite_mod(orders, rows):
    """Hermite basis of the lattice spanned by ``rows`` and the d_i * e_i.

    Returns k rows; row i is zero before column i, has the positive pivot
    g_i (a divisor of d_i) at column i, and entries in [0, g_j) at every later
    pivot column j.  Any entry of a non-pivot row may be reduced mod d_j at
    any time because d_j * e_j lies in the lattice.
    """
    k = len(orders)
    work = set()
    for r in rows:
        if len(r) != k:
            raise ValueError(f"row of length {len(r)} in a rank-{k} group")
        v = tuple(c % d for c, d in zip(r, orders))
        if any(v):
            work.add(v)
    basis = []
    for i in range(k):
        d = orders[i]
        pivot = [0] * k
        pivot[i] = d
        rest = set()
        for row in sorted(work):
            a = row[i]
            if a == 0:
                rest.add(row)
                continue
            b = pivot[i]
            x, y, g = xgcd(b, a)
            new_pivot = [x * p + y * c for p, c in zip(pivot, row)]
            other = [(a // g) * p - (b // g) * c for p, c in zip(pivot, row)]
            for j in range(i + 1, k):
                new_pivot[j] %= orders[j]
            other = tuple(c % dd for c, dd in zip(other, orders))
            if any(other):
                rest.add(other)
            pivot = new_pivot
        g = pivot[i]
        # (d/g) * pivot - d * e_i is a lattice vector that vanishes at column i
        spill = [0] * k
        for j in range(i + 1, k):
            spill[j] = (d // g) * pivot[j] % orders[j]
        spill = tuple(spill)
        if any(spill):
            rest.add(spill)
        basis.append(pivot)
        work = rest
    for j in range(k):
        g = basis[j][j]
        for a in range(j):
            q = basis[a][j] // g
            if q:
                basis[a] = [u - q * v for u, v in zip(basis[a], basis[j])]
    return tuple(tuple(r) for r in basis)


def hermite_contains(basis, v):
    v = list(v)
    k = len(v)
    for i in range(k):
        g = basis[i][i]
        if v[i] % g:
            return False
        q = v[i] // g
        if q:
            row = basis[i]
            for j in range(i, k):
                v[j] -= q * row[j]
    return True


def hermite_size(orders, basis):
    return prod(orders) // prod(basis[i][i] for i in range(len(orders)))


def hermite_elements(orders, basis):
    """All elements of the subgroup, each exactly once (unordered)."""
    k = len(orders)
    out = [tuple([0] * k)]
    for i in range(k):
        steps = orders[i] // basis[i][i]
        if steps == 1:
            continue
        row = basis[i]
        grown = []
        for v in out:
            for a in range(steps):
                grown.append(tuple((c + a * r) % d for c, r, d in zip(v, row, orders)))
        out = grown
    return out


def intersect_mod(orders, gens_a, gens_b):
    """Generators of the intersection of two subgroups of the same group."""
    k = len(orders)
    zeros = (0,) * k
    stacked = [tuple(a) + tuple(a) for a in gens_a] + [tuple(b) + zeros for b in gens_b]
    h = hermite_mod(tuple(orders) + tuple(orders), stacked)
    return [row[k:] for row in h[k:]]


def preimage_mod(orders, gens, images, target_orders, target_gens=()):
    """Generators of { x in <gens> : phi(x) in <target_gens> }.

    ``images[a]`` is phi(e_a); phi must be well defined modulo the orders,
    i.e. d_a * images[a] == 0 in the target group.
    """
    h = len(target_orders)
    k = len(orders)
    rows = []
    for s in gens:
        img = [0] * h
        for a, c in enumerate(s):
            if c:
                for t, v in enumerate(images[a]):
                    img[t] += c * v
        rows.append(tuple(img) + tuple(s))
    zeros = (0,) * k
    for t in target_gens:
        rows.append(tuple(t) + zeros)
    hb = hermite_mod(tuple(target_orders) + tuple(orders), rows)
    return [row[h:] for row in hb[h:]]


def smith_form(matrix):
    """Diagonalise an integer matrix by unimodular row and column operations.

    Returns ``(diag, V, V_inv)`` with U * A * V = diag(diag) for some
    unimodular U (not tracked).  The diagonal is non-negative and each entry
    divides the next one.
    """
    A = [list(r) for r in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vi = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_cols(a, b):
        for row in A:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]
        Vi[a], Vi[b] = Vi[b], Vi[a]

    def add_col(dst, src, q):
        # col_dst -= q * col_src
        for row in A:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]
        Vi[src] = [u + q * w for u, w in zip(Vi[src], Vi[dst])]

    diag = []
    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        A[t], A[best[0]] = A[best[0]], A[t]
        if best[1] != t:
            swap_cols(t, best[1])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    A[i] = [u - q * w for u, w in zip(A[i], A[t])]
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, q)
                    if A[t][j]:
                        dirty = True
            if dirty:
                best = None
                for i in range(t, m):
                    if A[i][t] and (best is None or abs(A[i][t]) < abs(A[best][t])):
                        best = i
                A[t], A[best] = A[best], A[t]
                bj = None
                for j in range(t, n):
                    if A[t][j] and (bj is None or abs(A[t][j]) < abs(A[t][bj])):
                        bj = j
                if bj != t:
                    swap_cols(t, bj)
                continue
            p = A[t][t]
            bad = None
            for i in range(t + 1, m):
                if any(A[i][j] % p for j in range(t + 1, n)):
                    bad = i
                    break
            if bad is None:
                break
            A[t] = [u + w for u, w in zip(A[t], A[bad])]
        if A[t][t] < 0:
            A[t] = [-u for u in A[t]]
        diag.append(A[t][t])
    return diag, V, Vi


def _solve_upper(basis, v):
    """Integer y with y * basis == v (basis upper triangular, v in its row span)."""
    k = len(basis)
    v = list(v)
    y = [0] * k
    for i in range(k):
        g = basis[i][i]
        if v[i] % g:
            raise ValueError("vector not in lattice")
        q = v[i] // g
        y[i] = q
        if q:
            for j in range(i, k):
                v[j] -= q * basis[i][j]
    return y


class QuotientPresentation:
    """G / S written as Z/s_1 + ... + Z/s_m with a fixed section.

    ``project`` maps an element of G to quotient coordinates, ``lift`` maps
    quotient coordinates back to a representative in G.
    """

    def __init__(self, orders, basis):
        self.ambient_orders = tuple(orders)
        diag, V, Vi = smith_form(basis)
        keep = [a for a, s in enumerate(diag) if s != 1]
        self.orders = tuple(diag[a] for a in keep)
        self._V = [[V[i][a] for a in keep] for i in range(len(orders))]
        self._lifts = [tuple(c % d for c, d in zip(Vi[a], orders)) for a in keep]

    def project(self, x):
        out = []
        for a, s in enumerate(self.orders):
            out.append(sum(c * self._V[i][a] for i, c in enumerate(x) if c) % s)
        return tuple(out)

    def lift(self, coords):
        k = len(self.ambient_orders)
        v = [0] * k
        for a, c in enumerate(coords):
            if c:
                for i, w in enumerate(self._lifts[a]):
                    v[i] += c * w
        return tuple(c % d for c, d in zip(v, self.ambient_orders))

    @property
    def generators(self):
        return list(self._lifts)


class SubgroupPresentation:
    """A subgroup S of G written abstractly as Z/t_1 + ... + Z/t_m."""

    def __init__(self, orders, basis):
        self.ambient_orders = tuple(orders)
        k = len(orders)
        self._basis = basis
        rel = []
        for i, d in enumerate(orders):
            e = [0] * k
            e[i] = d
            rel.append(_solve_upper(basis, e))
        diag, V, Vi = smith_form(rel)
        keep = [a for a, t in enumerate(diag) if t != 1]
        self.orders = tuple(diag[a] for a in keep)
        self._V = [[V[i][a] for a in keep] for i in range(k)]
        gens = []
        for a in keep:
            v = [0] * k
            for i, c in enumerate(Vi[a]):
                if c:
                    for j in range(k):
                        v[j] += c * basis[i][j]
            gens.append(tuple(c % d for c, d in zip(v, orders)))
        self.generators = gens

    def coords(self, x):
        y = _solve_upper(self._basis, x)
        return tuple(sum(c * self._V[i][a] for i, c in enumerate(y) if c) % t
                     for a, t in enumerate(self.orders))

    def element(self, coords):
        k = len(self.ambient_orders)
        v = [0] * k
        for c, g in zip(coords, self.generators):
            if c:
                for j in range(k):
                    v[j] += c * g[j]
        return tuple(c % d for c, d in zip(v, self.ambient_orders))


def element_order(x, orders):
    n = 1
    for c, d in zip(x, orders):
        o = d // gcd(c, d)
        n = n * o // gcd(n, o)
    return n

"""Finite rings given by structure constants over Z/d_1 + ... + Z/d_k.

Elements are plain tuples of ints (coordinate i reduced mod d_i).
"""
import itertools
import json
from math import prod

import numpy as np

from . import abelian
from .config import get_cap
from .errors import DimensionMismatch, NoIdentity, NotAssociative, OrderMismatch, ParseError, TooLarge


class FiniteRing:
    """An associative unital ring with additive basis b_1..b_k.

    ``mul[i][j]`` holds the coordinates of b_i * b_j.  Build instances with
    :func:`make_ring`, which validates every ring axiom on the basis.
    """

    def __init__(self, orders, one, mul, name=None):
        self.orders = tuple(orders)
        self.one = tuple(one)
        self.mul_table = mul
        self.name = name
        self._sparse = [[[(c, v) for c, v in enumerate(mul[i][j]) if v]
                         for j in range(len(orders))] for i in range(len(orders))]
        self._memo = {}

    # -- basic data --------------------------------------------------------
    @property
    def rank(self):
        return len(self.orders)

    @property
    def size(self):
        return prod(self.orders)

    @property
    def zero(self):
        return (0,) * len(self.orders)

    def basis(self, i):
        v = [0] * len(self.orders)
        v[i] = 1
        return tuple(v)

    def __len__(self):
        return self.size

    def __eq__(self, other):
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return (self.orders, self.one, self.mul_table) == (other.orders, other.one, other.mul_table)

    def __hash__(self):
        return hash((self.orders, self.one, self.mul_table))

    def __repr__(self):
        label = self.name or "ring"
        return f"<FiniteRing {label} |R|={self.size} orders={list(self.orders)}>"

    # -- arithmetic --------------------------------------------------------
    def reduce(self, x):
        return tuple(c % d for c, d in zip(x, self.orders))

    def add(self, x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, self.orders))

    def neg(self, x):
        return tuple(-a % d for a, d in zip(x, self.orders))

    def sub(self, x, y):
        return tuple((a - b) % d for a, b, d in zip(x, y, self.orders))

    def scale(self, n, x):
        return tuple(n * a % d for a, d in zip(x, self.orders))

    def mul(self, x, y):
        out = [0] * len(self.orders)
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._sparse[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for c, v in row[j]:
                    out[c] += ab * v
        return tuple(c % d for c, d in zip(out, self.orders))

    def contains(self, x):
        return len(x) == len(self.orders) and all(0 <= c < d for c, d in zip(x, self.orders))

    # -- numpy views used by the element scans ------------------------------
    @property
    def table(self):
        t = self._memo.get("np_table")
        if t is None:
            t = np.array(self.mul_table, dtype=np.int64).reshape((self.rank,) * 3)
            self._memo["np_table"] = t
        return t

    def element_array(self):
        """All elements as an (N, k) array in lexicographic order."""
        arr = self._memo.get("np_elements")
        if arr is None:
            check_cap(self.size)
            idx = np.arange(self.size, dtype=np.int64)
            arr = np.stack(np.unravel_index(idx, self.orders), axis=1).astype(np.int64)
            self._memo["np_elements"] = arr
        return arr

    def index_of(self, arr):
        """Lexicographic indices of the rows of an (n, k) array of reduced vectors."""
        return np.ravel_multi_index(tuple(arr.T), self.orders)

    def left_matrix(self, x):
        """Matrix A with (x*y) = y @ A (mod orders)."""
        return np.einsum("i,ijc->jc", np.asarray(x, dtype=np.int64), self.table)

    def right_matrix(self, x):
        """Matrix B with (y*x) = y @ B (mod orders)."""
        return np.einsum("j,ijc->ic", np.asarray(x, dtype=np.int64), self.table)

    def reduce_array(self, arr):
        return arr % np.asarray(self.orders, dtype=np.int64)


def check_cap(size, cap_name="elements"):
    cap = get_cap(cap_name)
    if size > cap:
        raise TooLarge(size, cap, cap_name)


def make_ring(orders, one, mul, name=None):
    """Validate structure constants and return a :class:`FiniteRing`."""
    orders = [int(d) for d in orders]
    k = len(orders)
    if k == 0:
        raise DimensionMismatch("a ring needs at least one basis element (the zero ring has no identity)")
    for d in orders:
        if d < 2:
            raise DimensionMismatch(f"additive orders must be >= 2, got {d}")
    if len(one) != k:
        raise DimensionMismatch(f"identity has {len(one)} coordinates, expected {k}")
    if len(mul) != k or any(len(row) != k for row in mul):
        raise DimensionMismatch(f"multiplication table must be {k}x{k}")
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            v = mul[i][j]
            if len(v) != k:
                raise DimensionMismatch(f"mul[{i}][{j}] has {len(v)} coordinates, expected {k}")
            row.append(tuple(int(c) % d for c, d in zip(v, orders)))
        table.append(tuple(row))
    table = tuple(table)
    one = tuple(int(c) % d for c, d in zip(one, orders))

    for i in range(k):
        for j in range(k):
            for c, v in enumerate(table[i][j]):
                if (orders[i] * v) % orders[c] or (orders[j] * v) % orders[c]:
                    raise OrderMismatch(i, j)

    r = FiniteRing(orders, one, table, name=name)
    for i in range(k):
        b = r.basis(i)
        if r.mul(one, b) != b or r.mul(b, one) != b:
            raise NoIdentity(i)

    t = r.table
    d = np.asarray(orders, dtype=np.int64)
    lhs = np.einsum("ija,alc->ijlc", t, t) % d
    rhs = np.einsum("jla,iac->ijlc", t, t) % d
    bad = np.argwhere((lhs != rhs).any(axis=3))
    if len(bad):
        i, j, l = (int(v) for v in bad[0])
        raise NotAssociative(i, j, l)
    return r


def enumerate_elements(r):
    """Every element of ``r`` exactly once, in lexicographic order."""
    check_cap(r.size)
    return itertools.product(*(range(d) for d in r.orders))


def is_unit(r, x):
    """x is a unit iff 1 lies in both xR and Rx."""
    k = r.rank
    right = abelian.hermite_mod(r.orders, [r.mul(x, r.basis(i)) for i in range(k)])
    if not abelian.hermite_contains(right, r.one):
        return False
    left = abelian.hermite_mod(r.orders, [r.mul(r.basis(i), x) for i in range(k)])
    return abelian.hermite_contains(left, r.one)


def unit_mask(r):
    """Boolean array over lexicographic element indices marking the units."""
    mask = r._memo.get("unit_mask")
    if mask is not None:
        return mask
    els = r.element_array()
    one_idx = int(r.index_of(np.asarray([r.one]))[0])
    mask = np.zeros(r.size, dtype=bool)
    for n in range(r.size):
        x = els[n]
        xr = r.index_of(r.reduce_array(els @ r.left_matrix(x)))
        if one_idx in xr:
            rx = r.index_of(r.reduce_array(els @ r.right_matrix(x)))
            mask[n] = one_idx in rx
    r._memo["unit_mask"] = mask
    return mask


def opposite_ring(r):
    """Same additive group, multiplication reversed."""
    op = r._memo.get("opposite")
    if op is None:
        k = r.rank
        mul = tuple(tuple(r.mul_table[j][i] for j in range(k)) for i in range(k))
        name = f"op({r.name})" if r.name else None
        op = FiniteRing(r.orders, r.one, mul, name=name)
        op._memo["opposite"] = r
        r._memo["opposite"] = op
    return op


def ring_to_dict(r):
    return {
        "name": r.name or "",
        "orders": list(r.orders),
        "one": list(r.one),
        "mul": [[list(v) for v in row] for row in r.mul_table],
    }


def ring_from_dict(data):
    try:
        return make_ring(data["orders"], data["one"], data["mul"], name=data.get("name") or None)
    except KeyError as exc:
        raise DimensionMismatch(f"ring spec is missing field {exc.args[0]!r}") from None


def load_ring(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg} at line {exc.lineno} column {exc.colno}", exc.pos) from None
    if not isinstance(data, dict):
        raise ParseError(f"{path}: ring spec must be a JSON object", 0)
    return ring_from_dict(data)


def dump_ring(r, path=None):
    text = json.dumps(ring_to_dict(r), indent=2)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return text

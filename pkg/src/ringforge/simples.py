"""Simple right modules, Ext^1 between them, and composition data of projectives.

Conventions: class ids are 1-based and follow the order of
:func:`wedderburn_data`.  The quiver has an arrow i -> j iff
Ext^1(S_i, S_j) != 0, i.e. iff S_j occurs in the top of rad P(S_i).
"""
from dataclasses import dataclass

from .errors import InvariantViolation
from .ring import opposite_ring
from .structure import (
    _memo, exact_log, jacobson_radical, primitive_orthogonal_decomposition,
    radical_filtration, wedderburn_data,
)
from .subgroup import image, preimage, sg_sum, whole


@dataclass
class SimpleClass:
    id: int
    size: int              # s_j = |S_j|
    multiplicity: int      # mu_j
    field_order: int       # q_j = |End(S_j)|
    characteristic: int    # p_j
    lift: tuple            # preimage in R of the central idempotent of R/J
    idempotent: tuple      # a local idempotent e with eR = P(S_j)
    annihilator: object    # Subgroup: the maximal ideal ann(S_j)
    block_size: int        # |R / ann(S_j)|

    @property
    def is_basic(self):
        return self.multiplicity == 1


def simple_classes(r):
    def compute():
        J = jacobson_radical(r)
        dec = primitive_orthogonal_decomposition(r)
        out = []
        for j, b in enumerate(wedderburn_data(r), start=1):
            e = dec.of_class(j)[0]
            ann = preimage(whole(r), lambda x, f=b.lift: r.mul(f, x), J)
            if r.size // ann.size != b.block_size:
                raise InvariantViolation(f"annihilator of class {j} has the wrong index")
            out.append(SimpleClass(j, b.simple_size, b.multiplicity, b.field_order,
                                   b.characteristic, b.lift, e, ann, b.block_size))
        return out
    return _memo(r, "simple_classes", compute)


def _cls(r, c):
    if isinstance(c, SimpleClass):
        return c
    return simple_classes(r)[c - 1]


def _isotypic_log(r, layer, deeper, lift, s):
    """log_s |(layer*f + deeper) / deeper| for the block lift f."""
    piece = sg_sum(image(layer, lambda x: r.mul(x, lift)), deeper)
    if piece.size % deeper.size:
        raise InvariantViolation("isotypic piece is not a union of cosets")
    return exact_log(piece.size // deeper.size, s)


def ext_multiplicity(r, i, j, idempotent=None, lift=None):
    """Number of copies of S_j in top(rad P(S_i)), computed as
    log_{s_j} |(e_i J f_j + e_i J^2) / e_i J^2|.

    ``idempotent`` / ``lift`` override the class representatives (the result
    does not depend on them).
    """
    ci, cj = _cls(r, i), _cls(r, j)
    e = ci.idempotent if idempotent is None else idempotent
    f = cj.lift if lift is None else lift
    filt = radical_filtration(r)
    eJ = image(filt[1], lambda x: r.mul(e, x))
    eJ2 = image(filt[2], lambda x: r.mul(e, x))
    return _isotypic_log(r, eJ, eJ2, f, cj.size)


def ext_nonzero(r, i, j, idempotent=None, lift=None):
    """Ext^1(S_i, S_j) != 0 iff e_i J f_j is not inside e_i J^2."""
    ci, cj = _cls(r, i), _cls(r, j)
    e = ci.idempotent if idempotent is None else idempotent
    f = cj.lift if lift is None else lift
    filt = radical_filtration(r)
    eJ2 = image(filt[2], lambda x: r.mul(e, x))
    return any(r.mul(r.mul(e, g), f) not in eJ2 for g in filt[1].generators)


@dataclass
class ExtQuiver:
    vertices: list
    matrix: list           # matrix[i-1][j-1] = m_ij
    side: str = "right"

    def multiplicity(self, i, j):
        return self.matrix[i - 1][j - 1]

    @property
    def arrows(self):
        return [(i, j, self.matrix[i - 1][j - 1])
                for i in self.vertices for j in self.vertices if self.matrix[i - 1][j - 1]]


def match_classes(r, other, to_other=None):
    """Map class ids of ``other`` to class ids of ``r``.

    ``other`` is a ring sharing R/J with ``r`` (the opposite ring), or a
    quotient R/I with I inside J(R) when ``to_other`` is the projection.
    Classes correspond when their block lifts agree modulo the radical.
    """
    J_other = jacobson_radical(other)
    mine = simple_classes(r)
    theirs = simple_classes(other)
    mapping = {}
    for t in theirs:
        hits = []
        for c in mine:
            lift = c.lift if to_other is None else to_other(c.lift)
            if other.sub(lift, t.lift) in J_other:
                hits.append(c.id)
        if len(hits) != 1:
            raise InvariantViolation(f"class {t.id} of the other ring matches {hits}")
        mapping[t.id] = hits[0]
    if sorted(mapping.values()) != [c.id for c in mine]:
        raise InvariantViolation("class matching is not a bijection")
    return mapping


def _right_matrix(r):
    classes = simple_classes(r)
    return [[ext_multiplicity(r, ci, cj) for cj in classes] for ci in classes]


def ext_quiver(r, side="right"):
    def compute():
        classes = simple_classes(r)
        ids = [c.id for c in classes]
        if side == "right":
            return ExtQuiver(ids, _right_matrix(r), "right")
        if side != "left":
            raise ValueError(f"side must be 'right' or 'left', not {side!r}")
        op = opposite_ring(r)
        op_matrix = _right_matrix(op)
        back = match_classes(r, op)
        n = len(ids)
        matrix = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                matrix[back[a + 1] - 1][back[b + 1] - 1] = op_matrix[a][b]
        return ExtQuiver(ids, matrix, "left")
    return _memo(r, f"ext_quiver_{side}", compute)


@dataclass
class CompositionTable:
    layers: dict           # class id -> list over radical layers of multiplicity vectors

    def factors(self, i):
        """Class ids occurring anywhere in P(S_i)."""
        return {j for layer in self.layers[i] for j, m in enumerate(layer, start=1) if m}


def composition_table(r):
    """Multiplicity of S_j in e_i J^t / e_i J^{t+1} for every class i and layer t."""
    def compute():
        classes = simple_classes(r)
        filt = radical_filtration(r)
        table = {}
        for ci in classes:
            e = ci.idempotent
            layers = [image(p, lambda x: r.mul(e, x)) for p in filt.powers]
            rows = []
            for t in range(filt.index):
                rows.append([_isotypic_log(r, layers[t], layers[t + 1], cj.lift, cj.size)
                             for cj in classes])
            table[ci.id] = rows
            top = [int(c.id == ci.id) for c in classes]
            if rows[0] != top:
                raise InvariantViolation(f"top of P(S_{ci.id}) is not S_{ci.id}")
            total = 1
            for row in rows:
                for cj, m in zip(classes, row):
                    total *= cj.size ** m
            if total != layers[0].size:
                raise InvariantViolation(f"composition factors of P(S_{ci.id}) do not account for |eR|")
        return CompositionTable(table)
    return _memo(r, "composition_table", compute)


def linkage_graph(r):
    """Edges {i, i'} (as sorted pairs, loops included) when P(S_i), P(S_i')
    share a composition factor."""
    table = composition_table(r)
    ids = [c.id for c in simple_classes(r)]
    edges = []
    for a in ids:
        for b in ids:
            if a <= b and table.factors(a) & table.factors(b):
                edges.append((a, b))
    return ids, edges

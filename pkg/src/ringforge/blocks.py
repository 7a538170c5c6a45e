"""Block decomposition, Ext-path components and the theorem verifiers.

Every verifier returns a :class:`Verdict`; a failing verdict carries a
concrete witness and is a counterexample certificate, never an exception.
"""
from dataclasses import dataclass, field

from .errors import InvariantViolation
from .simples import ext_quiver, linkage_graph, match_classes, simple_classes
from .structure import _memo, center, central_idempotents, jacobson_radical, radical_filtration
from .subgroup import principal_right_ideal, quotient_ring, sg_intersect, sg_product, subring


@dataclass
class Verdict:
    name: str
    passed: bool
    witness: object = None
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "witness": _jsonable(self.witness),
                "detail": self.detail}


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def components(vertices, edges):
    """Connected components of an undirected graph, as a sorted tuple of sorted tuples."""
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups = {}
    for v in vertices:
        groups.setdefault(find(v), []).append(v)
    return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


@dataclass
class BlockDecomposition:
    idempotents: list      # central primitive idempotents c_1..c_m
    rings: list            # subgroups c_l R
    assignment: dict       # class id -> 1-based block id

    @property
    def sizes(self):
        return [s.size for s in self.rings]

    def partition(self):
        groups = {}
        for cls, blk in self.assignment.items():
            groups.setdefault(blk, []).append(cls)
        return tuple(sorted(tuple(sorted(g)) for g in groups.values()))

    def classes_of(self, l):
        return sorted(c for c, b in self.assignment.items() if b == l)


def block_decomposition(r):
    def compute():
        prims = central_idempotents(r, center(r)).primitive
        total = r.zero
        for c in prims:
            total = r.add(total, c)
            for d in prims:
                if c != d and any(r.mul(c, d)):
                    raise InvariantViolation("primitive central idempotents are not orthogonal")
        if total != r.one:
            raise InvariantViolation("primitive central idempotents do not sum to 1")
        J = jacobson_radical(r)
        classes = simple_classes(r)
        owner = {}
        for cls in classes:
            hits = [n for n, c in enumerate(prims) if r.mul(cls.lift, c) not in J]
            if len(hits) != 1:
                raise InvariantViolation(f"class {cls.id} lies in blocks {hits}")
            owner[cls.id] = hits[0]
        # order blocks by their smallest class id
        order = sorted(range(len(prims)), key=lambda n: min(c for c, o in owner.items() if o == n))
        rank = {n: pos + 1 for pos, n in enumerate(order)}
        idem = [prims[n] for n in order]
        rings = [principal_right_ideal(r, c) for c in idem]
        return BlockDecomposition(idem, rings, {c: rank[o] for c, o in owner.items()})
    return _memo(r, "blocks", compute)


def block_ring(r, l):
    """The l-th block c_l R as a ring with identity c_l."""
    dec = block_decomposition(r)
    c = dec.idempotents[l - 1]
    name = f"{r.name}[block {l}]" if r.name else None
    return subring(r, dec.rings[l - 1], c, name=name)


def ext_components(q):
    """Classes joined by Ext-paths: components of the symmetrised quiver."""
    return components(q.vertices, [(i, j) for i, j, _ in q.arrows])


# -- verifiers -----------------------------------------------------------------

def verify_theorem_main(r):
    blocks = block_decomposition(r).partition()
    right = ext_components(ext_quiver(r, "right"))
    left = ext_components(ext_quiver(r, "left"))
    ok = blocks == right == left
    witness = None if ok else {"blocks": blocks, "right_ext": right, "left_ext": left}
    return Verdict("theorem_main", ok, witness,
                   "block partition equals Ext-path components of the right and left quivers")


def _lemma_partitions(r):
    ids, edges = linkage_graph(r)
    return {
        "blocks": block_decomposition(r).partition(),
        "linkage": components(ids, edges),
        "ext": ext_components(ext_quiver(r, "right")),
    }


def _relabel(partition, mapping):
    return tuple(sorted(tuple(sorted(mapping[v] for v in part)) for part in partition))


def verify_lemma_equivalences(r):
    parts = _lemma_partitions(r)
    ok = len(set(parts.values())) == 1
    witness = None if ok else dict(parts)
    filt = radical_filtration(r)
    if ok and not filt[2].is_zero():
        q, proj = quotient_ring(r, filt[2])
        mapping = match_classes(r, q, to_other=proj)
        qparts = {f"quotient_{k}": _relabel(v, mapping) for k, v in _lemma_partitions(q).items()}
        if any(v != parts["blocks"] for v in qparts.values()):
            ok = False
            witness = {**parts, **qparts}
    return Verdict("lemma_equivalences", ok, witness,
                   "linkage components = Ext components = blocks, also on R/J^2")


def verify_char_uniformity(r):
    dec = block_decomposition(r)
    classes = {c.id: c for c in simple_classes(r)}
    for l in range(1, len(dec.idempotents) + 1):
        ids = dec.classes_of(l)
        chars = {classes[i].characteristic for i in ids}
        if len(chars) > 1:
            a = ids[0]
            b = next(i for i in ids if classes[i].characteristic != classes[a].characteristic)
            return Verdict("char_uniformity", False,
                           {"block": l, "classes": [a, b],
                            "chars": [classes[a].characteristic, classes[b].characteristic]})
    return Verdict("char_uniformity", True, None, "one characteristic per block")


def verify_cardinality_basic(r):
    dec = block_decomposition(r)
    classes = {c.id: c for c in simple_classes(r)}
    for l in range(1, len(dec.idempotents) + 1):
        ids = dec.classes_of(l)
        equal_card = all(classes[i].size == classes[i].field_order for i in ids)
        basic = all(classes[i].multiplicity == 1 for i in ids)
        if equal_card != basic:
            return Verdict("cardinality_basic", False,
                           {"block": l, "equal_cardinality": equal_card, "basic": basic})
    return Verdict("cardinality_basic", True, None,
                   "per block: |S| = |End S| for all simples iff the block is basic")


def verify_annihilator_lemma(r):
    classes = {c.id: c for c in simple_classes(r)}
    for i, j, _ in ext_quiver(r, "right").arrows:
        if i == j:
            continue
        I, Jd = classes[i].annihilator, classes[j].annihilator
        prod_size = sg_product(I, Jd).size
        meet_size = sg_intersect(I, Jd).size
        if not prod_size < meet_size:
            return Verdict("annihilator_lemma", False,
                           {"arrow": [i, j], "product_size": prod_size, "intersection_size": meet_size})
    return Verdict("annihilator_lemma", True, None,
                   "for every arrow i->j (i != j): |I_i I_j| < |I_i meet I_j|")


def verify_coprime_char(r):
    classes = {c.id: c for c in simple_classes(r)}
    for side in ("right", "left"):
        for i, j, _ in ext_quiver(r, side).arrows:
            if classes[i].characteristic != classes[j].characteristic:
                return Verdict("coprime_char", False,
                               {"side": side, "arrow": [i, j],
                                "chars": [classes[i].characteristic, classes[j].characteristic]})
    return Verdict("coprime_char", True, None, "every Ext arrow joins classes of equal characteristic")


VERIFIERS = (
    verify_theorem_main,
    verify_lemma_equivalences,
    verify_annihilator_lemma,
    verify_char_uniformity,
    verify_cardinality_basic,
    verify_coprime_char,
)


@dataclass
class TheoremReport:
    verdicts: list = field(default_factory=list)

    @property
    def passed(self):
        return all(v.passed for v in self.verdicts)

    def __getitem__(self, name):
        for v in self.verdicts:
            if v.name == name:
                return v
        raise KeyError(name)

    def to_dict(self):
        return {v.name: v.to_dict() for v in self.verdicts}


def theorem_report(r):
    return TheoremReport([check(r) for check in VERIFIERS])

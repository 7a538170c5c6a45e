"""Socles of indecomposable projectives, QF detection and the Nakayama permutation.

The permutation is reported on isomorphism classes of simples, which makes it
unique even when multiplicities exceed one.
"""
from dataclasses import dataclass

from .blocks import Verdict
from .errors import NotQF
from .ring import opposite_ring
from .simples import _isotypic_log, match_classes, simple_classes
from .structure import _memo, jacobson_radical
from .subgroup import kernel_of, principal_right_ideal, zero

SOCLE_NOT_SIMPLE = "socle not simple"
NOT_INJECTIVE = "socle map not injective"
LEFT_MISMATCH = "left-right mismatch"


def right_socle_of_projective(r, e):
    """{ x in eR : x*g = 0 for all generators g of J } = soc(eR)."""
    J = jacobson_radical(r)
    fns = [(lambda x, g=g: r.mul(x, g)) for g in J.generators]
    return kernel_of(principal_right_ideal(r, e), fns)


def socle_isotype(r, s):
    """{class id: multiplicity} of a right module s with s*J = 0."""
    out = {}
    nothing = zero(r)
    for c in simple_classes(r):
        m = _isotypic_log(r, s, nothing, c.lift, c.size)
        if m:
            out[c.id] = m
    return out


def _socle_map(r):
    """(permutation dict or None, failure reason or None)."""
    perm = {}
    for c in simple_classes(r):
        iso = socle_isotype(r, right_socle_of_projective(r, c.idempotent))
        if len(iso) != 1 or next(iter(iso.values())) != 1:
            return perm, f"{SOCLE_NOT_SIMPLE} at class {c.id}"
        perm[c.id] = next(iter(iso))
    if len(set(perm.values())) != len(perm):
        return perm, NOT_INJECTIVE
    return perm, None


@dataclass
class NakayamaData:
    is_qf: bool
    permutation: dict = None       # class id -> class id, present iff QF
    left_permutation: dict = None  # must equal the inverse of ``permutation``
    failure_reason: str = None

    def cycles(self):
        """Permutation in cycle notation, e.g. [[1, 2]] for (1 2); fixed points included."""
        if not self.permutation:
            return []
        seen, out = set(), []
        for start in sorted(self.permutation):
            if start in seen:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.permutation[x]
            out.append(cyc)
        return out

    def to_dict(self):
        return {
            "is_qf": self.is_qf,
            "permutation": None if self.permutation is None else {str(k): v for k, v in sorted(self.permutation.items())},
            "left_permutation": None if self.left_permutation is None else {str(k): v for k, v in sorted(self.left_permutation.items())},
            "failure_reason": self.failure_reason,
        }


def nakayama(r):
    def compute():
        perm, reason = _socle_map(r)
        if reason:
            return NakayamaData(False, failure_reason=reason)
        op = opposite_ring(r)
        op_perm, op_reason = _socle_map(op)
        if op_reason:
            return NakayamaData(False, failure_reason=f"{LEFT_MISMATCH}: left {op_reason}")
        back = match_classes(r, op)
        left = {back[a]: back[b] for a, b in op_perm.items()}
        # Soc(P(_{pi(i)} S)) = _i S
        if any(left[perm[i]] != i for i in perm):
            return NakayamaData(False, failure_reason=LEFT_MISMATCH)
        return NakayamaData(True, perm, left)
    return _memo(r, "nakayama", compute)


def verify_propqf(r):
    data = nakayama(r)
    if not data.is_qf:
        raise NotQF(data.failure_reason)
    q = {c.id: c.field_order for c in simple_classes(r)}
    for i, j in sorted(data.permutation.items()):
        if q[i] != q[j]:
            return Verdict("propqf", False, {"class": i, "image": j, "field_orders": [q[i], q[j]]})
    return Verdict("propqf", True, None, "End(S_i) and End(S_pi(i)) have equal order")

"""Full analysis pipeline, its JSON report, and DOT rendering of the quiver."""
import json
import time
from dataclasses import asdict, dataclass

from .blocks import Verdict, block_decomposition, theorem_report
from .qf import nakayama, verify_propqf
from .simples import composition_table, ext_quiver, simple_classes
from .structure import radical_filtration

SCHEMA_VERSION = 1


@dataclass
class AnalysisReport:
    ring: dict                    # name, size, orders
    filtration: list              # |J^0|, |J^1|, ..., 1
    wedderburn: list              # per class: id, s, mu, q, p
    blocks: list                  # per block: classes, size
    quiver_right: list            # multiplicity matrices, rows = source class
    quiver_left: list
    composition: list             # per class: id, layers
    nakayama: dict
    verdicts: list                # Verdict.to_dict() entries
    timing: dict = None           # stage -> seconds; None with --no-timing
    schema: int = SCHEMA_VERSION

    @property
    def passed(self):
        return all(v["passed"] for v in self.verdicts)

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data):
        return cls(**data)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def analyze(r, timing=True):
    stamps = {}

    def stage(name, fn):
        t0 = time.perf_counter()
        out = fn()
        stamps[name] = round(time.perf_counter() - t0, 6)
        return out

    filt = stage("structure", lambda: radical_filtration(r))
    classes = stage("simples", lambda: simple_classes(r))
    right = stage("quiver_right", lambda: ext_quiver(r, "right"))
    left = stage("quiver_left", lambda: ext_quiver(r, "left"))
    comp = stage("composition", lambda: composition_table(r))
    dec = stage("blocks", lambda: block_decomposition(r))
    nak = stage("qf", lambda: nakayama(r))
    verdicts = stage("verifiers", lambda: theorem_report(r).verdicts)
    if nak.is_qf:
        verdicts = verdicts + [verify_propqf(r)]
    else:
        verdicts = verdicts + [Verdict("propqf", True, None, "not applicable: ring is not QF")]

    return AnalysisReport(
        ring={"name": r.name, "size": r.size, "orders": list(r.orders)},
        filtration=[p.size for p in filt.powers],
        wedderburn=[{"id": c.id, "s": c.size, "mu": c.multiplicity, "q": c.field_order,
                     "p": c.characteristic} for c in classes],
        blocks=[{"classes": dec.classes_of(l), "size": size}
                for l, size in enumerate(dec.sizes, start=1)],
        quiver_right=[list(row) for row in right.matrix],
        quiver_left=[list(row) for row in left.matrix],
        composition=[{"id": c.id, "layers": comp.layers[c.id]} for c in classes],
        nakayama=nak.to_dict(),
        verdicts=[v.to_dict() for v in verdicts],
        timing=stamps if timing else None,
    )


def _quote(text):
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def quiver_dot(r, side="right"):
    """DOT digraph of the Ext quiver with one cluster per block."""
    q = ext_quiver(r, side)
    classes = {c.id: c for c in simple_classes(r)}
    dec = block_decomposition(r)
    lines = [f"digraph {_quote(r.name or 'ring')} {{", "  node [shape=box];"]
    for l in range(1, len(dec.idempotents) + 1):
        lines.append(f"  subgraph cluster_block{l} {{")
        lines.append(f"    label={_quote(f'block {l}')};")
        for j in dec.classes_of(l):
            c = classes[j]
            label = f"S{j} |S|={c.size} q={c.field_order} p={c.characteristic} mu={c.multiplicity}"
            lines.append(f"    S{j} [label={_quote(label)}];")
        lines.append("  }")
    for i, j, m in sorted(q.arrows):
        lines.append(f"  S{i} -> S{j} [label={_quote(m)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"

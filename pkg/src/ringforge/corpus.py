"""Constructor expressions and the built-in corpus.

Expression grammar (whitespace ignored)::

    expr     := "zmod:" N
              | "field:" Q
              | "mat:" N ":" expr
              | "tri:" N ":" expr
              | "group:" Q ":" group          group := "C" N | "S" N
              | "pathalg:" option (":" option)*
              | "prod:(" expr ")" ("," "(" expr ")")+

    pathalg options: q=Q  vertices=N  arrows=S>T,S>T,...  rel=rad2
"""
from .constructors import (
    QuiverSpec, cyclic_group, direct_product, finite_field, group_algebra, matrix_ring,
    path_algebra_mod, symmetric_group, upper_triangular, zmod,
)
from .errors import ParseError, RingError, UnknownName


def _int(text, offset, what):
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {text!r}", offset) from None


def _split_top(text, sep, base):
    """Split on ``sep`` outside parentheses; returns (piece, offset) pairs."""
    out, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", base + i)
        elif ch == sep and depth == 0:
            out.append((text[start:i], base + start))
            start = i + 1
    if depth:
        raise ParseError("unbalanced '('", base + len(text))
    out.append((text[start:], base + start))
    return out


def _parse(text, base):
    head, _, rest = text.partition(":")
    roff = base + len(head) + 1
    if head == "zmod":
        return zmod(_int(rest, roff, "modulus"))
    if head == "field":
        return finite_field(_int(rest, roff, "field order"))
    if head in ("mat", "tri"):
        n, _, inner = rest.partition(":")
        if not inner:
            raise ParseError(f"{head} needs a size and a base ring", roff)
        size = _int(n, roff, "matrix size")
        ring = _parse(inner, roff + len(n) + 1)
        return matrix_ring(ring, size) if head == "mat" else upper_triangular(ring, size)
    if head == "group":
        q, _, g = rest.partition(":")
        order = _int(q, roff, "field order")
        goff = roff + len(q) + 1
        if not g or g[0] not in "CS":
            raise ParseError("group must be C<n> or S<n>", goff)
        n = _int(g[1:], goff + 1, "group size")
        table = cyclic_group(n) if g[0] == "C" else symmetric_group(n)
        return group_algebra(order, table, name=f"F{order}[{g}]")
    if head == "pathalg":
        opts = {}
        for piece, off in _split_top(rest, ":", roff):
            key, eq, value = piece.partition("=")
            if not eq:
                raise ParseError(f"pathalg option {piece!r} is not key=value", off)
            opts[key] = (value, off + len(key) + 1)
        for needed in ("vertices",):
            if needed not in opts:
                raise ParseError(f"pathalg needs {needed}=", roff)
        q = _int(*opts.get("q", ("2", roff)), "field order") if "q" in opts else 2
        nv = _int(*opts["vertices"], "vertex count")
        arrows = []
        if "arrows" in opts and opts["arrows"][0]:
            value, off = opts["arrows"]
            for a, aoff in _split_top(value, ",", off):
                s, gt, t = a.partition(">")
                if not gt:
                    raise ParseError(f"arrow {a!r} must look like S>T", aoff)
                arrows.append((_int(s, aoff, "arrow source"), _int(t, aoff + len(s) + 1, "arrow target")))
        rel = opts.get("rel", ("rad2", roff))[0]
        if rel != "rad2":
            raise ParseError("only rel=rad2 is available in expressions; use the library for explicit relations",
                             opts["rel"][1])
        spec = QuiverSpec(nv, tuple(arrows), "rad_square_zero", q)
        ring = path_algebra_mod(spec)
        ring.name = text
        return ring
    if head == "prod":
        parts = _split_top(rest, ",", roff)
        if len(parts) < 2:
            raise ParseError("prod needs at least two factors", roff)
        rings = []
        for piece, off in parts:
            if not (piece.startswith("(") and piece.endswith(")")):
                raise ParseError("prod factors must be parenthesised", off)
            rings.append(_parse(piece[1:-1], off + 1))
        out = rings[0]
        for other in rings[1:]:
            out = direct_product(out, other)
        return out
    raise ParseError(f"unknown constructor {head!r}", base)


def parse_expression(text):
    """Build a ring from a constructor expression such as ``mat:2:zmod:2``."""
    clean = "".join(text.split())
    if not clean:
        raise ParseError("empty expression", 0)
    try:
        ring = _parse(clean, 0)
    except ParseError:
        raise
    except RingError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if ring.name is None or ring.name == "":
        ring.name = clean
    return ring


DEFAULT_CORPUS = {
    "Z2": "zmod:2",
    "Z4": "zmod:4",
    "Z6": "zmod:6",
    "Z8": "zmod:8",
    "Z12": "zmod:12",
    "Z27": "zmod:27",
    "Z64": "zmod:64",
    "M2F2": "mat:2:zmod:2",
    "M2Z4": "mat:2:zmod:4",
    "T2F2": "tri:2:zmod:2",
    "T2F3": "tri:2:zmod:3",
    "F2C2": "group:2:C2",
    "F2C4": "group:2:C4",
    "F3C3": "group:3:C3",
    "F3C2": "group:3:C2",
    "A2-rad2": "pathalg:q=2:vertices=2:arrows=1>2:rel=rad2",
    "kronecker-rad2": "pathalg:q=2:vertices=2:arrows=1>2,1>2:rel=rad2",
    "nakayama-cyclic-2": "pathalg:q=2:vertices=2:arrows=1>2,2>1:rel=rad2",
    "Z4xT2F2": "prod:(zmod:4),(tri:2:zmod:2)",
}


def corpus_names():
    return list(DEFAULT_CORPUS)


def corpus_ring(name):
    try:
        expr = DEFAULT_CORPUS[name]
    except KeyError:
        raise UnknownName(f"no corpus ring named {name!r}") from None
    ring = parse_expression(expr)
    ring.name = name
    return ring


def resolve(text):
    """A corpus name, a constructor expression, or a path to a ring-spec JSON file."""
    from pathlib import Path

    from .ring import load_ring
    if text in DEFAULT_CORPUS:
        return corpus_ring(text)
    if text.endswith(".json") or Path(text).is_file():
        return load_ring(text)
    return parse_expression(text)

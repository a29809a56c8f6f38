"""Graph files, angle literals, sweep CSV and certificate JSON."""
from __future__ import annotations

import json
import math
import re

from .certificates import Certificate, SweepResult
from .errors import DuplicateEdge, LoopEdge, ParseError, VertexOutOfRange
from .graph import Graph, from_edge_list
from .magnetic import MagneticPotential

_PI_EXPR = re.compile(
    r"""^\s*(?P<sign>[+-])?\s*
        (?P<num>\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*
        pi\s*
        (?:/\s*(?P<den>\d+(?:\.\d*)?|\.\d+))?\s*$""",
    re.VERBOSE | re.IGNORECASE,
)


def parse_angle(text: str) -> float:
    """Radians from a float literal or a multiple of pi such as ``pi/2``, ``3pi/2``, ``-2*pi/3``."""
    s = text.strip()
    try:
        return float(s)
    except ValueError:
        pass
    m = _PI_EXPR.match(s)
    if not m:
        raise ValueError(f"not an angle: {text!r}")
    value = math.pi * float(m["num"] or 1.0)
    if m["den"]:
        value /= float(m["den"])
    return -value if m["sign"] == "-" else value


def parse_graph_file(text: str) -> tuple[Graph, MagneticPotential | None]:
    """Parse the ``n m`` header followed by ``m`` lines ``u v [alpha]``.

    ``alpha`` applies to the arc ``u -> v`` as written and is stored against
    the reference orientation ``(min, max)``. Edges without a value get 0 when
    any other edge has one; with no values at all the potential is None.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty graph file", 1)
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError(f"header must be 'n m', got {' '.join(head)!r}", lineno)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"header must hold two integers, got {' '.join(head)!r}", lineno) from None
    if n < 1 or m < 0:
        raise ParseError(f"bad header n={n} m={m}", lineno)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else lineno
        raise ParseError(f"header promises {m} edges, found {len(body)}", last)
    pairs, values, any_value = [], [], False
    seen: set[tuple[int, int]] = set()
    for lineno, tok in body:
        if len(tok) not in (2, 3):
            raise ParseError(f"edge line needs 'u v' or 'u v alpha', got {' '.join(tok)!r}", lineno)
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError(f"vertex ids must be integers, got {' '.join(tok[:2])!r}", lineno) from None
        a = 0.0
        if len(tok) == 3:
            any_value = True
            try:
                a = parse_angle(tok[2])
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            if not math.isfinite(a):
                raise ParseError(f"angle must be finite, got {tok[2]!r}", lineno)
        if u == v:
            raise LoopEdge(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"line {lineno}: edge ({u}, {v}) outside 0..{n - 1}")
        if (min(u, v), max(u, v)) in seen:
            raise DuplicateEdge(f"line {lineno}: edge ({u}, {v}) appears twice")
        seen.add((min(u, v), max(u, v)))
        pairs.append((u, v))
        values.append(-a if u > v else a)
    G = from_edge_list(n, pairs)
    return G, MagneticPotential(tuple(values)) if any_value else None


def read_graph_file(path) -> tuple[Graph, MagneticPotential | None]:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_file(fh.read())


def format_graph_file(G: Graph, potential: MagneticPotential | None = None) -> str:
    lines = [f"{G.n} {G.m}"]
    for i, (u, v) in enumerate(G.edges):
        if potential is None:
            lines.append(f"{u} {v}")
        else:
            lines.append(f"{u} {v} {potential.values[i]!r}")
    return "\n".join(lines) + "\n"


def format_number(x: float) -> str:
    """12 significant digits; roundoff-level magnitudes print as 0."""
    x = float(x)
    if abs(x) < 5e-12:
        return "0"
    return f"{x:.12g}"


def emit_sweep_csv(S: SweepResult) -> str:
    """Header ``t,lambda_1,...,lambda_n`` and one row per grid point.

    The full chord torus with several chords labels its coordinates
    ``t_1,...,t_c``.
    """
    p = S.params.shape[1]
    if p == 1:
        head = ["t"]
    else:
        head = [f"t_{i + 1}" for i in range(p)]
    head += [f"lambda_{k + 1}" for k in range(S.spectra.shape[1])]
    out = [",".join(head)]
    for params, spec in zip(S.params, S.spectra):
        out.append(",".join([format_number(x) for x in params] + [format_number(x) for x in spec]))
    return "\n".join(out) + "\n"


def certificate_json(cert: Certificate) -> str:
    return json.dumps(cert.to_dict(), sort_keys=True)

"""Plain-text ``v1`` formats for chirotopes, SGE instances and placements.

chirotope v1::

    chirotope v1
    <n>
    <C(n,3) characters from + and -, lexicographic triple order>

sge v1::

    sge v1
    n <source element count>
    hull <h1> <h2> <h3>          (reduced instances only)
    source <digest>              (reduced instances only)
    labels <label> <label> ...
    graph <name>
    <u> <w>
    ...

placement v1::

    placement v1
    <label> <xNum>/<xDen> <yNum>/<yDen>

Serialization is canonical, so equal values give byte-identical text.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Mapping

from .chirotope import Chirotope
from .errors import DegenerateInput, FormatError, VersionError
from .geometry import Point, as_point
from .reduction import GadgetMeta, LabeledGraph, SgeInstance

KINDS = ("chirotope", "sge", "placement")


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((number, line))
    return out


def _header(lines, kind: str):
    if not lines:
        raise FormatError("empty input", 1)
    number, first = lines[0]
    parts = first.split()
    if len(parts) != 2 or parts[0] not in KINDS:
        raise FormatError(f"unknown header {first!r}", number)
    if parts[0] != kind:
        raise FormatError(f"expected a {kind} file, got {parts[0]}", number)
    if parts[1] != "v1":
        raise VersionError(f"unsupported {kind} version {parts[1]!r}")
    return lines[1:]


def detect_kind(text: str) -> str:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty input", 1)
    number, first = lines[0]
    kind = first.split()[0]
    if kind not in KINDS:
        raise FormatError(f"unknown header {first!r}", number)
    return kind


# chirotope v1

def format_chirotope(chi: Chirotope) -> str:
    return f"chirotope v1\n{chi.n}\n{chi.sign_string()}\n"


def parse_chirotope(text: str) -> Chirotope:
    body = _header(_lines(text), "chirotope")
    if len(body) != 2:
        raise FormatError("expected a count line and a sign line", body[0][0] if body else 1)
    (ln, count), (ls, signs) = body
    try:
        n = int(count)
    except ValueError:
        raise FormatError(f"bad element count {count!r}", ln) from None
    if n < 3:
        raise FormatError("need at least 3 elements", ln)
    signs = signs.replace("−", "-")
    expected = n * (n - 1) * (n - 2) // 6
    if len(signs) != expected:
        raise FormatError(f"expected {expected} signs for n={n}, got {len(signs)}", ls)
    bad = set(signs) - {"+", "-"}
    if bad:
        raise FormatError(f"foreign characters {''.join(sorted(bad))!r} in sign string", ls)
    return Chirotope(n, tuple(1 if c == "+" else -1 for c in signs))


# placement v1

def _frac(text: str, number: int) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad rational {text!r}", number) from None
    return value


def format_placement(placement: Mapping) -> str:
    out = ["placement v1"]
    for label, p in placement.items():
        x, y = as_point(p)
        out.append(f"{label} {x.numerator}/{x.denominator} {y.numerator}/{y.denominator}")
    return "\n".join(out) + "\n"


def parse_placement(text: str) -> dict[str, Point]:
    body = _header(_lines(text), "placement")
    placement: dict[str, Point] = {}
    for number, line in body:
        parts = line.split()
        if len(parts) != 3:
            raise FormatError("expected `label x y`", number)
        label = parts[0]
        if label in placement:
            raise FormatError(f"duplicate label {label!r}", number)
        placement[label] = Point(_frac(parts[1], number), _frac(parts[2], number))
    return placement


def points_from_placement(placement: Mapping) -> list[Point]:
    """Source point list from a placement labelled ``0..n-1``."""
    try:
        keys = sorted(placement, key=int)
    except ValueError:
        raise FormatError("point labels must be integers 0..n-1") from None
    if [int(k) for k in keys] != list(range(len(keys))):
        raise FormatError("point labels must be exactly 0..n-1")
    return [as_point(placement[k]) for k in keys]


def placement_from_points(points) -> dict[str, Point]:
    return {str(i): as_point(p) for i, p in enumerate(points)}


# sge v1

def format_instance(inst: SgeInstance) -> str:
    out = ["sge v1", f"n {inst.n}"]
    if inst.meta is not None:
        out.append("hull " + " ".join(str(h) for h in inst.meta.hull))
    if inst.source_digest is not None:
        out.append(f"source {inst.source_digest}")
    out.append("labels " + " ".join(str(x) for x in inst.labels))
    for name, g in zip(inst.names, inst.graphs):
        out.append(f"graph {name}")
        out.extend(f"{u} {w}" for u, w in g.sorted_edges())
    return "\n".join(out) + "\n"


def parse_instance(text: str) -> SgeInstance:
    body = _header(_lines(text), "sge")
    n = None
    hull = None
    digest = None
    labels = None
    label_set: set = set()
    blocks: list[tuple[str, list]] = []
    for number, line in body:
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if blocks and key != "graph":
            parts = line.split()
            if len(parts) != 2:
                raise FormatError("expected an edge line `u w`", number)
            u, w = parts
            if u not in label_set or w not in label_set:
                raise FormatError(f"edge {u} {w} uses an unknown label", number)
            if u == w:
                raise FormatError(f"self-loop at {u}", number)
            blocks[-1][1].append((u, w))
            continue
        if key == "n":
            try:
                n = int(rest)
            except ValueError:
                raise FormatError(f"bad n {rest!r}", number) from None
        elif key == "hull":
            try:
                hull = tuple(int(x) for x in rest.split())
            except ValueError:
                raise FormatError("hull entries must be integers", number) from None
            if len(hull) != 3:
                raise FormatError("hull must list three elements", number)
        elif key == "source":
            digest = rest
        elif key == "labels":
            labels = tuple(rest.split())
            label_set = set(labels)
            if len(label_set) != len(labels):
                raise FormatError("duplicate label in label list", number)
        elif key == "graph":
            if labels is None:
                raise FormatError("graph block before the label list", number)
            if not rest:
                raise FormatError("graph block needs a name", number)
            blocks.append((rest, []))
        else:
            raise FormatError(f"unexpected line {line!r}", number)
    if n is None or labels is None:
        raise FormatError("missing `n` or `labels` line", body[-1][0] if body else 1)
    if not blocks:
        raise FormatError("no graph blocks", body[-1][0] if body else 1)
    graphs = tuple(LabeledGraph.from_edges(labels, edges) for _, edges in blocks)
    meta = GadgetMeta(n, hull) if hull is not None else None
    if meta is not None and tuple(meta.labels()) != labels:
        raise FormatError("label list does not match the gadget layout for this hull")
    return SgeInstance(n, labels, tuple(name for name, _ in blocks), graphs, meta, digest)


# file helpers

_PARSERS = {"chirotope": parse_chirotope, "sge": parse_instance, "placement": parse_placement}


def read(path: str | Path, kind: str | None = None):
    text = Path(path).read_text(encoding="utf-8")
    found = detect_kind(text)
    if kind is not None and found != kind:
        raise FormatError(f"{path}: expected a {kind} file, got {found}", 1)
    try:
        return _PARSERS[found](text)
    except DegenerateInput as exc:
        raise FormatError(str(exc)) from None


def dumps(value) -> str:
    if isinstance(value, Chirotope):
        return format_chirotope(value)
    if isinstance(value, SgeInstance):
        return format_instance(value)
    if isinstance(value, Mapping):
        return format_placement(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")

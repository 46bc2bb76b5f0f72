"""Reading and writing graphs, certificates and the small text forms.

ECG v1 text::

    ecg <n> <k>
    <u> <v> <c>      one line per vertex pair, 0-indexed vertices
    # comments anywhere

The JSON mirror is ``{"n": n, "edges": [[u, v, c], ...]}``. Both are written
grouped by canonical color with pairs sorted inside each color, so a graph
reads back with the same color numbering. Files must be UTF-8.
"""
import json
import logging
import re
from pathlib import Path

from .core.colored import ColoredGraph, build_colored_graph
from .core.exceptions import ECPermError, GraphFormatError
from .core.permutations import Labeling, Permutation
from .serializers import CertificateSerializer, ColoredGraphSerializer, QuotientLabelsSerializer

logger = logging.getLogger(__name__)

PERMUTATION_RE = re.compile(r"^\(\s*\d+(\s*,\s*\d+)*\s*\)$")


def _integers(fields, source, line):
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(fields)!r}", source, line)


def parse_ecg(text: str, source: str = "<string>") -> ColoredGraph:
    header = None
    rows = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 3 or fields[0] != "ecg":
                raise GraphFormatError("header must be 'ecg <n> <k>'", source, line_no)
            header = (*_integers(fields[1:], source, line_no), line_no)
            continue
        if len(fields) != 3:
            raise GraphFormatError(f"expected '<u> <v> <c>', got {line!r}", source, line_no)
        rows.append((line_no, _integers(fields, source, line_no)))
    if header is None:
        raise GraphFormatError("missing 'ecg <n> <k>' header", source)
    n, k, header_line = header

    try:
        graph = build_colored_graph(n, [row for _, row in rows])
    except ECPermError as e:
        pair = getattr(e, "pair", None)
        lines = [no for no, row in rows if pair is not None and {row[0], row[1]} == set(pair)]
        # a duplicate is reported where it repeats
        line_no = lines[-1] if lines else None
        raise GraphFormatError(str(e), source, line_no) from e
    if graph.k != k:
        raise GraphFormatError(f"header declares k={k} but {graph.k} colors are used", source, header_line)
    return graph


def dump_ecg(graph: ColoredGraph) -> str:
    lines = [f"ecg {graph.n} {graph.k}"]
    lines.extend(f"{u} {v} {c}" for u, v, c in graph.written_edges())
    return "\n".join(lines) + "\n"


def parse_graph_json(data, source: str = "<json>") -> ColoredGraph:
    serializer = ColoredGraphSerializer(data=data)
    if not serializer.is_valid():
        raise GraphFormatError(f"invalid graph: {json.dumps(serializer.errors)}", source)
    return serializer.validated_data["graph"]


def dump_graph_json(graph: ColoredGraph) -> str:
    return json.dumps(ColoredGraphSerializer(graph).data)


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        line = e.object[:e.start].count(b"\n") + 1
        raise GraphFormatError(f"not UTF-8 text (byte {e.start})", str(path), line) from e


def _read_json(path: Path):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as e:
        raise GraphFormatError(e.msg, str(path), e.lineno) from e


def load_graph(path) -> ColoredGraph:
    path = Path(path)
    if path.suffix == ".json":
        return parse_graph_json(_read_json(path), str(path))
    return parse_ecg(_read_text(path), str(path))


def save_graph(graph: ColoredGraph, path) -> None:
    path = Path(path)
    text = dump_graph_json(graph) + "\n" if path.suffix == ".json" else dump_ecg(graph)
    path.write_text(text)
    logger.debug(f"wrote {graph!r} to {path}")


def load_certificate(path):
    path = Path(path)
    serializer = CertificateSerializer(data=_read_json(path))
    if not serializer.is_valid():
        raise GraphFormatError(f"invalid certificate: {json.dumps(serializer.errors)}", str(path))
    return serializer.validated_data["certificate"]


def load_quotient_labels(path) -> dict:
    path = Path(path)
    serializer = QuotientLabelsSerializer(data=_read_json(path))
    if not serializer.is_valid():
        raise GraphFormatError(f"invalid quotient labels: {json.dumps(serializer.errors)}", str(path))
    return serializer.validated_data["pins"]


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if not PERMUTATION_RE.match(text):
        raise GraphFormatError(f"expected a permutation like (1,3,2), got {text!r}", "--perm")
    try:
        return Permutation(tuple(int(x) for x in text[1:-1].split(",")))
    except ECPermError as e:
        raise GraphFormatError(str(e), "--perm") from e


def format_permutation(pi: Permutation) -> str:
    return str(pi)


def parse_labeling(text: str, n: int) -> Labeling:
    """``id`` or whitespace separated ``v:label`` pairs."""
    text = text.strip()
    if text == "id":
        return Labeling.identity(n)
    labels = {}
    for token in text.split():
        vertex, sep, label = token.partition(":")
        if not sep or not vertex.isdigit() or not label.isdigit():
            raise GraphFormatError(f"expected 'v:label', got {token!r}", "--labeling")
        if int(vertex) in labels:
            raise GraphFormatError(f"vertex {vertex} labeled twice", "--labeling")
        labels[int(vertex)] = int(label)
    if sorted(labels) != list(range(n)):
        raise GraphFormatError(f"labeling must cover vertices 0..{n - 1}", "--labeling")
    try:
        return Labeling(tuple(labels[v] for v in range(n)))
    except ECPermError as e:
        raise GraphFormatError(str(e), "--labeling") from e


def format_labeling(labeling: Labeling) -> str:
    return " ".join(f"{v}:{label}" for v, label in enumerate(labeling.label_of))

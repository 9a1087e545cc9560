"""Witness certificates: canonical text form, parsing and independent checking.

A certificate is a JSON document with a fixed key order and one arc (or
block) per line, so equal witnesses give byte-identical files::

    {
      "schema_version": 1,
      "kind": "digraph",
      "n": 3,
      "method": "diff-cover(2)",
      "params": {"cover": [0, 1]},
      "claimed_max_in_degree": 1,
      "arcs": [
        [0, 1],
        [1, 2],
        [2, 0]
      ]
    }

Family certificates carry ``claimed_mcard`` and ``blocks`` instead. The
checker only looks at ``n``, the arcs or blocks and the claimed number;
``method`` and ``params`` are informational.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .digraph import Digraph, max_in_degree, uncovered_pair
from .families import BlockFamily, find_sdr, is_symmetric, mcard, uncovered_point_pair

SCHEMA_VERSION = 1


class CertificateError(ValueError):
    """The document is not a well-formed certificate."""


@dataclass(frozen=True)
class Certificate:
    kind: str
    n: int
    claim: int
    method: str
    params: dict = field(default_factory=dict)
    arcs: tuple[tuple[int, int], ...] = ()
    blocks: tuple[tuple[int, ...], ...] = ()
    schema_version: int = SCHEMA_VERSION

    @classmethod
    def for_digraph(cls, d: Digraph, claim: int, method: str, params: dict | None = None) -> Certificate:
        return cls("digraph", d.n, claim, method, dict(params or {}), arcs=tuple(d.arcs()))

    @classmethod
    def for_family(cls, family: BlockFamily, claim: int, method: str, params: dict | None = None) -> Certificate:
        return cls("family", family.n, claim, method, dict(params or {}), blocks=tuple(sorted(family.blocks)))

    def digraph(self) -> Digraph:
        return Digraph.from_arcs(self.n, self.arcs)

    def family(self) -> BlockFamily:
        return BlockFamily(self.n, self.blocks)


def dumps(cert: Certificate) -> str:
    claim_key = "claimed_max_in_degree" if cert.kind == "digraph" else "claimed_mcard"
    items_key, items = ("arcs", cert.arcs) if cert.kind == "digraph" else ("blocks", cert.blocks)
    lines = [
        "{",
        f'  "schema_version": {cert.schema_version},',
        f'  "kind": {json.dumps(cert.kind)},',
        f'  "n": {cert.n},',
        f'  "method": {json.dumps(cert.method)},',
        f'  "params": {json.dumps(cert.params, sort_keys=True)},',
        f'  "{claim_key}": {cert.claim},',
    ]
    if items:
        lines.append(f'  "{items_key}": [')
        body = [f"    {json.dumps(list(item))}" for item in items]
        lines.append(",\n".join(body))
        lines.append("  ]")
    else:
        lines.append(f'  "{items_key}": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _int(doc: dict, key: str, minimum: int = 0) -> int:
    value = doc.get(key)
    if type(value) is not int or value < minimum:
        raise CertificateError(f"{key!r} must be an integer >= {minimum}, got {value!r}")
    return value


def _points(raw, n: int, what: str) -> tuple[int, ...]:
    if not isinstance(raw, list) or any(type(v) is not int for v in raw):
        raise CertificateError(f"{what} must be a list of integers, got {raw!r}")
    for v in raw:
        if not 0 <= v < n:
            raise CertificateError(f"{what} has vertex {v} outside [0, {n})")
    return tuple(raw)


def loads(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise CertificateError("top level must be a JSON object")
    version = _int(doc, "schema_version", 1)
    if version != SCHEMA_VERSION:
        raise CertificateError(f"unsupported schema_version {version}")
    kind = doc.get("kind")
    n = _int(doc, "n")
    method = doc.get("method", "")
    params = doc.get("params", {})
    if not isinstance(method, str) or not isinstance(params, dict):
        raise CertificateError("'method' must be a string and 'params' an object")

    if kind == "digraph":
        claim = _int(doc, "claimed_max_in_degree")
        raw = doc.get("arcs")
        if not isinstance(raw, list):
            raise CertificateError("'arcs' must be a list")
        arcs = []
        for item in raw:
            arc = _points(item, n, "arc")
            if len(arc) != 2:
                raise CertificateError(f"arc must have two endpoints, got {item!r}")
            if arc[0] == arc[1]:
                raise CertificateError(f"self-loop {list(arc)}")
            arcs.append(arc)
        if len(set(arcs)) != len(arcs):
            raise CertificateError("repeated arc")
        return Certificate(kind, n, claim, method, params, arcs=tuple(arcs))
    if kind == "family":
        claim = _int(doc, "claimed_mcard")
        raw = doc.get("blocks")
        if not isinstance(raw, list):
            raise CertificateError("'blocks' must be a list")
        blocks = []
        for item in raw:
            block = _points(item, n, "block")
            if len(set(block)) != len(block):
                raise CertificateError(f"block repeats a point: {item!r}")
            blocks.append(tuple(sorted(block)))
        return Certificate(kind, n, claim, method, params, blocks=tuple(blocks))
    raise CertificateError(f"'kind' must be 'digraph' or 'family', got {kind!r}")


def read(path: str | Path) -> Certificate:
    return loads(Path(path).read_text())


def write(cert: Certificate, path: str | Path) -> None:
    Path(path).write_text(dumps(cert))


@dataclass
class Report:
    ok: bool
    lines: list[str]
    counterexample: tuple[int, int] | None = None

    def __str__(self) -> str:
        return "\n".join(self.lines)


def check(cert: Certificate) -> Report:
    """Recompute every claim from the arcs or blocks alone.

    Stops at the first false claim and names it.
    """
    lines = [f"{cert.kind} certificate on {cert.n} vertices, method {cert.method or '?'}"]
    if cert.kind == "digraph":
        d = cert.digraph()
        pair = uncovered_pair(d)
        if pair is not None:
            lines.append(f"FAIL not mediated: pair {{{pair[0]}, {pair[1]}}} lies in no closed in-neighbourhood")
            return Report(False, lines, pair)
        lines.append("ok   mediated")
        actual = max_in_degree(d)
        if actual > cert.claim:
            lines.append(f"FAIL max in-degree exceeds claim: {actual} > {cert.claim}")
            return Report(False, lines)
        lines.append(f"ok   max in-degree {actual} <= claimed {cert.claim}")
        return Report(True, lines)

    family = cert.family()
    if not is_symmetric(family):
        lines.append(f"FAIL not symmetric: {len(family.blocks)} blocks on {family.n} points")
        return Report(False, lines)
    lines.append("ok   symmetric")
    pair = uncovered_point_pair(family)
    if pair is not None:
        lines.append(f"FAIL not 2-covering: pair {{{pair[0]}, {pair[1]}}} lies in no block")
        return Report(False, lines, pair)
    lines.append("ok   2-covering")
    if find_sdr(family) is None:
        lines.append("FAIL no system of distinct representatives")
        return Report(False, lines)
    lines.append("ok   has a system of distinct representatives")
    actual = mcard(family)
    if actual > cert.claim:
        lines.append(f"FAIL largest block exceeds claim: {actual} > {cert.claim}")
        return Report(False, lines)
    lines.append(f"ok   largest block {actual} <= claimed {cert.claim}")
    return Report(True, lines)

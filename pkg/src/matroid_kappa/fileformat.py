"""Line-oriented matroid description files.

The format is UTF-8 text with ``key: value`` lines::

    type: uniform|graphic|linear-gf2|explicit|file-derived
    elements: a b c d

followed by type-specific content:

* uniform      - ``k: 2``
* graphic      - ``edges: e1=u-v e2=v-w ...`` (vertex names free of ``-``)
* linear-gf2   - ``matrix:`` then one 0/1 row per line, columns in
  element order
* explicit     - ``independent:`` then one set per line, comma-separated
  labels, ``{}`` for the empty set
* file-derived - ``base: path`` plus ``apply: dual`` or ``apply: minor``
  (with optional ``contract:`` / ``delete:`` label lines) or
  ``apply: sum`` with ``with: path ...``; paths are resolved relative to
  the describing file

Blank lines and ``#`` comments are ignored.  Parse errors carry the line
number and a reason.
"""

from __future__ import annotations

import os

from .constructions import MinorSpec, direct_sum, dual, take_minor
from .core import (
    ElementSet,
    GroundSet,
    Matroid,
    explicit_matroid,
    gf2_matroid,
    graphic_matroid,
    uniform_matroid,
)
from .errors import DomainError


class ParseError(DomainError):
    """Malformed description file; message carries the line number."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


def _scan(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


def parse_label_set(ground: GroundSet, text: str) -> ElementSet:
    """Comma-separated labels into a set; ``{}`` or empty means the empty set."""
    text = text.strip()
    if text in ("", "{}"):
        return ground.empty()
    return ground.set_of(part.strip() for part in text.split(","))


def parse_matroid_text(text: str, base_dir: str = ".") -> Matroid:
    lines = list(_scan(text))
    if not lines:
        raise ParseError(1, "empty description")

    fields: dict[str, tuple[int, str]] = {}
    tail_key: str | None = None
    tail: list[tuple[int, str]] = []
    for no, line in lines:
        if tail_key is not None:
            tail.append((no, line))
            continue
        if ":" not in line:
            raise ParseError(no, "expected 'key: value'")
        key, _, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        if key in ("matrix", "independent") and value == "":
            tail_key = key
            fields[key] = (no, "")
            continue
        if key in fields:
            raise ParseError(no, f"duplicate key {key!r}")
        fields[key] = (no, value)

    def need(key: str) -> tuple[int, str]:
        if key not in fields:
            raise ParseError(lines[0][0], f"missing required key {key!r}")
        return fields[key]

    type_no, mtype = need("type")
    if mtype == "file-derived":
        return _parse_derived(fields, base_dir, type_no)

    el_no, el_text = need("elements")
    labels = el_text.split()
    if not labels:
        raise ParseError(el_no, "elements line lists no labels")
    try:
        ground = GroundSet(labels)
    except DomainError as exc:
        raise ParseError(el_no, str(exc)) from None

    if mtype == "uniform":
        k_no, k_text = need("k")
        try:
            k = int(k_text)
        except ValueError:
            raise ParseError(k_no, f"k must be an integer, got {k_text!r}") from None
        if k < 0:
            raise ParseError(k_no, "k must be non-negative")
        return uniform_matroid(ground, k)

    if mtype == "graphic":
        e_no, e_text = need("edges")
        edges = []
        seen = []
        for token in e_text.split():
            if "=" not in token:
                raise ParseError(e_no, f"edge {token!r} is not label=u-v")
            lab, _, ends = token.partition("=")
            if "-" not in ends:
                raise ParseError(e_no, f"edge {token!r} has no u-v endpoints")
            u, _, v = ends.partition("-")
            if not u or not v:
                raise ParseError(e_no, f"edge {token!r} has an empty endpoint")
            edges.append((lab, u, v))
            seen.append(lab)
        if seen != labels:
            raise ParseError(
                e_no, "edge labels must match the elements line, in order"
            )
        return graphic_matroid(edges)

    if mtype == "linear-gf2":
        m_no, _ = need("matrix")
        rows = []
        for no, line in tail:
            entries = line.split()
            try:
                row = [int(x) for x in entries]
            except ValueError:
                raise ParseError(no, "matrix rows contain only 0 and 1") from None
            if any(x not in (0, 1) for x in row):
                raise ParseError(no, "matrix rows contain only 0 and 1")
            if len(row) != len(labels):
                raise ParseError(
                    no, f"row has {len(row)} entries, need {len(labels)}"
                )
            rows.append(row)
        if not rows:
            raise ParseError(m_no, "matrix: must be followed by at least one row")
        return gf2_matroid(ground, rows)

    if mtype == "explicit":
        i_no, _ = need("independent")
        family = []
        for no, line in tail:
            try:
                family.append(tuple(parse_label_set(ground, line)))
            except DomainError as exc:
                raise ParseError(no, str(exc)) from None
        if not family:
            raise ParseError(i_no, "independent: must be followed by sets")
        try:
            return explicit_matroid(ground, family)
        except DomainError as exc:
            raise ParseError(i_no, str(exc)) from None

    raise ParseError(
        type_no,
        f"unknown type {mtype!r}; expected uniform, graphic, linear-gf2, "
        "explicit or file-derived",
    )


def _parse_derived(fields, base_dir: str, type_no: int) -> Matroid:
    if "base" not in fields:
        raise ParseError(type_no, "file-derived needs a 'base:' path")
    base_no, base_path = fields["base"]
    if "apply" not in fields:
        raise ParseError(type_no, "file-derived needs an 'apply:' operation")
    op_no, op = fields["apply"]
    base = parse_matroid_file(os.path.join(base_dir, base_path))

    if op == "dual":
        return dual(base)
    if op == "minor":
        contract_text = fields.get("contract", (op_no, ""))[1]
        delete_text = fields.get("delete", (op_no, ""))[1]
        try:
            c = base.ground.set_of(contract_text.split())
            d = base.ground.set_of(delete_text.split())
            return take_minor(base, MinorSpec(c, d))
        except DomainError as exc:
            raise ParseError(op_no, str(exc)) from None
    if op == "sum":
        if "with" not in fields:
            raise ParseError(op_no, "apply: sum needs a 'with:' list of paths")
        w_no, w_text = fields["with"]
        others = [
            parse_matroid_file(os.path.join(base_dir, p)) for p in w_text.split()
        ]
        if not others:
            raise ParseError(w_no, "'with:' lists no paths")
        try:
            return direct_sum([base, *others])
        except DomainError as exc:
            raise ParseError(w_no, str(exc)) from None
    raise ParseError(op_no, f"unknown apply operation {op!r}")


def parse_matroid_file(path: str) -> Matroid:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_matroid_text(text, base_dir=os.path.dirname(path) or ".")


def set_to_jsonable(s: ElementSet) -> list[str]:
    """Canonical JSON form of a set: its labels in canonical order."""
    return list(s)


def matroid_summary(m: Matroid) -> dict:
    return {
        "representation": m.rep,
        "elements": list(m.ground.labels),
        "size": len(m.ground),
        "rank": m.full_rank,
        "basis": set_to_jsonable(m.basis()),
    }

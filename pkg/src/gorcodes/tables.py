"""Golden vertex lists for the degree-3 and degree-4 classification tables.

Vertices are written with unit vectors ``e1, ..., ed`` (1-based) as in the
published tables; :func:`parse_vertex` turns ``"e1+e2+2e5"`` into a vector.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Tuple

from gorcodes.simplex import HStarPolynomial, LatticeSimplex

_TERM = re.compile(r"^(\d*)e(\d+)$")
_NAME = re.compile(r"^D(\d+)\^\((\d+)\)$")


def parse_vertex(text: str, dim: int) -> Tuple[int, ...]:
    """``"0"`` or a sum of terms ``ke_i``."""
    v = [0] * dim
    text = text.replace(" ", "")
    if text == "0":
        return tuple(v)
    for term in text.split("+"):
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"bad vertex term {term!r}")
        k, i = int(m.group(1) or 1), int(m.group(2))
        if not 1 <= i <= dim:
            raise ValueError(f"unit vector e{i} out of range for dimension {dim}")
        v[i - 1] += k
    return tuple(v)


@dataclass(frozen=True)
class TableRow:
    s: int
    type_id: int
    graph: str
    hstar: HStarPolynomial
    vertices: Tuple[Tuple[int, ...], ...]

    @property
    def name(self) -> str:
        return f"D{self.type_id}^({self.s})"

    @classmethod
    def from_label(cls, label: str, vertices) -> "TableRow":
        """Build a row from a ``"D5^(3); K4⊔K2; 1+7t+7t^2+t^3"`` style label."""
        parts = [p.strip() for p in label.split(";")]
        m = _NAME.match(parts[0]) if len(parts) == 3 else None
        if not m:
            raise ValueError(f"row label {label!r} is not 'D<id>^(<s>); graph; h*'")
        return cls(int(m.group(2)), int(m.group(1)), parts[1], HStarPolynomial.parse(parts[2]),
                   tuple(tuple(v) for v in vertices))

    def simplex(self) -> LatticeSimplex:
        return LatticeSimplex(self.vertices)


def _units(dim: int, upto: int) -> List[str]:
    return [f"e{i}" for i in range(1, upto + 1)]


def _row(s: int, type_id: int, graph: str, h: str, verts: List[str]) -> TableRow:
    dim = 2 * s - 1
    assert len(verts) == dim + 1, (s, type_id)
    return TableRow(s, type_id, graph, HStarPolynomial.parse(h), tuple(parse_vertex(v, dim) for v in verts))


def _doubled(dim: int) -> List[str]:
    return ["0"] + [f"2e{i}" for i in range(1, dim + 1)]


TABLE_DEGREE_3: Tuple[TableRow, ...] = (
    _row(3, 1, "∅", "1+t^3", ["0", "e1", "e2", "e3", "e4", "e1+e2+e3+e4+2e5"]),
    _row(3, 2, "K2", "1+t+t^2+t^3", ["0", "e1", "e2", "e3", "2e4", "e1+e2+e3+2e5"]),
    _row(3, 3, "K3", "1+3t+3t^2+t^3", ["0", "e1", "e2", "2e3", "2e4", "e1+e2+2e5"]),
    _row(3, 4, "3K2", "1+3t+3t^2+t^3", ["0", "e1", "e2", "2e3", "e2+2e4", "e1+2e5"]),
    _row(3, 5, "K4⊔K2", "1+7t+7t^2+t^3", ["0", "e1", "2e2", "2e3", "2e4", "e1+2e5"]),
    _row(3, 6, "K6", "1+15t+15t^2+t^3", _doubled(5)),
)

TABLE_DEGREE_4: Tuple[TableRow, ...] = (
    _row(4, 1, "∅", "1+t^4", ["0"] + _units(7, 6) + ["e1+e2+e3+e4+e5+e6+2e7"]),
    _row(4, 2, "∅", "1+2t^2+t^4", ["0", "e1", "e2", "e1+e2+2e3", "e4", "e5", "e6", "e4+e5+e6+2e7"]),
    _row(4, 3, "∅", "1+6t^2+t^4", ["0", "e1", "e2", "e3", "e4", "e1+e4+2e5", "e2+e4+2e6", "e3+e4+2e7"]),
    _row(4, 4, "∅", "1+14t^2+t^4", ["0", "e1", "e2", "e3", "e2+e3+2e4", "e1+e3+2e5", "e1+e2+2e6", "e1+e2+e3+2e7"]),
    _row(4, 5, "K2", "1+t+t^3+t^4", ["0"] + _units(7, 5) + ["e1+2e6", "e2+e3+e4+e5+2e7"]),
    _row(4, 6, "K2", "1+t+4t^2+t^3+t^4", ["0"] + _units(7, 4) + ["2e5", "e1+e2+2e6", "e3+e4+2e7"]),
    _row(4, 7, "2K2", "1+2t+2t^2+2t^3+t^4", ["0"] + _units(7, 4) + ["e1+2e5", "e2+2e6", "e3+e4+2e7"]),
    _row(4, 8, "2K2", "1+2t+10t^2+2t^3+t^4", ["0", "e1", "e2", "e3", "2e4", "e1+2e5", "e1+e2+2e6", "e1+e3+2e7"]),
    _row(4, 9, "K3", "1+3t+3t^3+t^4", ["0"] + _units(7, 4) + ["2e5", "2e6", "e1+e2+e3+e4+2e7"]),
    _row(4, 10, "4K2", "1+4t+6t^2+4t^3+t^4", ["0", "e1", "e1+2e2", "e3", "e3+2e4", "e5", "e5+2e6", "2e7"]),
    _row(4, 11, "4K2", "1+4t+22t^2+4t^3+t^4", ["0", "e1", "e2", "2e3", "e2+2e4", "e1+2e5", "e1+e2+2e6", "e1+e2+2e7"]),
    _row(4, 12, "K3⊔K2", "1+4t+6t^2+4t^3+t^4", ["0", "e1", "e2", "e3", "2e4", "2e5", "e1+2e6", "e2+e3+2e7"]),
    _row(4, 13, "2K3", "1+6t+18t^2+6t^3+t^4", ["0", "e1", "e2", "2e3", "2e4", "e1+2e5", "e1+2e6", "e1+e2+2e7"]),
    _row(4, 14, "K4", "1+6t+2t^2+6t^3+t^4", ["0", "e1", "e2", "e3", "2e4", "2e5", "2e6", "e1+e2+e3+2e7"]),
    _row(4, 15, "K4⊔2K2", "1+8t+14t^2+8t^3+t^4", ["0", "e1", "e2", "2e3", "2e4", "2e5", "e1+2e6", "e2+2e7"]),
    _row(4, 16, "2K4", "1+12t+38t^2+12t^3+t^4", ["0", "e1", "2e2", "2e3", "2e4", "e1+2e5", "e1+2e6", "e1+2e7"]),
    _row(4, 17, "K5", "1+10t+10t^2+10t^3+t^4", ["0", "e1", "e2", "2e3", "2e4", "2e5", "2e6", "e1+e2+2e7"]),
    _row(4, 18, "K6⊔K2", "1+16t+30t^2+16t^3+t^4", ["0", "e1", "2e2", "2e3", "2e4", "2e5", "2e6", "e1+2e7"]),
    _row(4, 19, "K8", "1+28t+70t^2+28t^3+t^4", _doubled(7)),
)

ALL_ROWS: Tuple[TableRow, ...] = TABLE_DEGREE_3 + TABLE_DEGREE_4


@dataclass(frozen=True)
class RowReport:
    """Outcome of checking one table row; ``failures`` names each bad field."""

    row: TableRow
    group_hstar: HStarPolynomial | None
    code_hstar: HStarPolynomial | None
    oracle_hstar: HStarPolynomial | None
    graph: str | None
    class_ids: Tuple[int, ...]
    failures: Tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_row(row: TableRow, classes, oracle: bool = True, budget: int | None = None) -> RowReport:
    """Compare one row against the group, code, oracle and classification routes."""
    from gorcodes.codes import canonical_code, group_to_code, hstar_from_code
    from gorcodes.ehrhart import DEFAULT_BUDGET, ehrhart_polynomial
    from gorcodes.extremal import build_height_levels, graph_of_H1
    from gorcodes.simplex import group_of_simplex, hstar_from_group

    failures: List[str] = []
    try:
        simplex = row.simplex()
        group = group_of_simplex(simplex)
    except ValueError as exc:
        return RowReport(row, None, None, None, None, (), (f"vertices: {exc}",))
    gh = hstar_from_group(group)
    if gh != row.hstar:
        failures.append(f"group h* {gh} != table {row.hstar}")
    ch = oh = label = None
    ids: Tuple[int, ...] = ()
    try:
        code = group_to_code(group)
    except ValueError as exc:
        failures.append(f"code: {exc}")
    else:
        ch = hstar_from_code(code)
        if ch != row.hstar:
            failures.append(f"code h* {ch} != table {row.hstar}")
        canon = canonical_code(code)
        ids = tuple(c.type_id for c in classes if c.code == canon)
        if len(ids) != 1:
            failures.append(f"matches {len(ids)} classified classes")
        try:
            label = graph_of_H1(build_height_levels(group, row.s)[1], 2 * row.s).label
        except ValueError as exc:
            failures.append(f"graph: {exc}")
        else:
            if label != row.graph:
                failures.append(f"graph {label} != table {row.graph}")
    if oracle:
        data = ehrhart_polynomial(simplex, budget=budget or DEFAULT_BUDGET, interior=False)
        oh = data.hstar
        if oh != row.hstar:
            failures.append(f"oracle h* {oh} != table {row.hstar}")
    return RowReport(row, gh, ch, oh, label, ids, tuple(failures))

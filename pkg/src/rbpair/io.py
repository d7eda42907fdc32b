"""JSON wire formats for every object the command line reads and writes.

Rationals travel as strings -- ``"p/q"`` in lowest terms with a positive
denominator, or a bare integer string -- and matrices as row-major nested
lists of such strings.  Parsing is strict: any shape, type, or range
violation raises :class:`MalformedInputError` carrying a location path, so
callers can separate malformed input from semantic refutations, which
surface as reports or typed errors.

Group tables load in two stages.  ``parse_group_payload`` checks shape
only, so a well-formed table that breaks the group laws is a refutation
rather than a parse error.  ``load_group`` then pins the identity at index
0: inputs whose identity sits elsewhere are relabeled, and the permutation
that was applied is reported alongside the validation certificates.

Serializers emit plain dicts; ``dump_json`` renders them with sorted keys
and fixed separators so equal objects always produce identical bytes.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Sequence

from .errors import AxiomsFailedError, MalformedInputError
from .groups import FiniteGroup, GroupMap, validate_group
from .lie import LieAlgebra
from .linalg import Matrix, vzero
from .matched_group import MatchedPairGroup
from .matched_lie import MatchedPairLie
from .quadratic import QuadraticRB
from .rb_lie import RotaBaxterLie
from .reports import Report

_FRACTION_RE = re.compile(r"^-?[0-9]+(?:/[0-9]+)?$")


# ------------------------------------------------------------ scalar parsing


def parse_fraction(value, where: str) -> Fraction:
    """Parse a rational string like ``"3"``, ``"-5"``, or ``"2/3"``."""
    if not isinstance(value, str):
        raise MalformedInputError(
            f"{where}: expected a rational string, got {value!r}")
    if not _FRACTION_RE.match(value):
        raise MalformedInputError(
            f"{where}: {value!r} is not an integer or p/q rational")
    try:
        return Fraction(value)
    except ZeroDivisionError:
        raise MalformedInputError(f"{where}: {value!r} has denominator zero")


# ----------------------------------------------------------- shape utilities


def _as_dict(obj, where: str) -> dict:
    if not isinstance(obj, dict):
        raise MalformedInputError(f"{where}: expected an object")
    return obj


def _as_list(obj, where: str) -> list:
    if not isinstance(obj, list):
        raise MalformedInputError(f"{where}: expected an array")
    return obj


def _as_str(obj, where: str) -> str:
    if not isinstance(obj, str):
        raise MalformedInputError(f"{where}: expected a string")
    return obj


def _as_int(obj, where: str) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise MalformedInputError(f"{where}: expected an integer")
    return obj


def _field(d: dict, key: str, where: str):
    if key not in d:
        raise MalformedInputError(f"{where}: missing key {key!r}")
    return d[key]


def _expect_kind(d: dict, kind: str, where: str) -> None:
    found = _field(d, "kind", where)
    if found != kind:
        raise MalformedInputError(
            f"{where}: expected kind {kind!r}, found {found!r}")


def _index(obj, bound: int, where: str) -> int:
    value = _as_int(obj, where)
    if not 0 <= value < bound:
        raise MalformedInputError(
            f"{where}: index {value} out of range [0,{bound})")
    return value


def _int_table(obj, rows: int, cols: int, bound: int,
               where: str) -> tuple[tuple[int, ...], ...]:
    lst = _as_list(obj, where)
    if len(lst) != rows:
        raise MalformedInputError(
            f"{where}: expected {rows} rows, got {len(lst)}")
    out = []
    for r, row_obj in enumerate(lst):
        row = _as_list(row_obj, f"{where}[{r}]")
        if len(row) != cols:
            raise MalformedInputError(
                f"{where}[{r}]: expected {cols} entries, got {len(row)}")
        out.append(tuple(
            _index(v, bound, f"{where}[{r}][{c}]") for c, v in enumerate(row)))
    return tuple(out)


# ----------------------------------------------------------------- matrices


def matrix_to_rows(m: Matrix) -> list[list[str]]:
    return [[str(e) for e in row] for row in m.entries]


def parse_matrix(obj, rows: int, cols: int, where: str) -> Matrix:
    lst = _as_list(obj, where)
    if len(lst) != rows:
        raise MalformedInputError(
            f"{where}: expected {rows} rows, got {len(lst)}")
    parsed = []
    for r, row_obj in enumerate(lst):
        row = _as_list(row_obj, f"{where}[{r}]")
        if len(row) != cols:
            raise MalformedInputError(
                f"{where}[{r}]: expected {cols} entries, got {len(row)}")
        parsed.append([parse_fraction(v, f"{where}[{r}][{c}]")
                       for c, v in enumerate(row)])
    return Matrix.from_rows(parsed, cols)


# -------------------------------------------------------------- Lie algebras


def lie_algebra_to_dict(g: LieAlgebra) -> dict:
    brackets = []
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            terms = [[k, str(coeff)] for k, coeff in enumerate(g.c[i][j])
                     if coeff]
            if terms:
                brackets.append({"i": i, "j": j, "terms": terms})
    return {"kind": "lie_algebra", "dim": n, "basis": list(g.labels),
            "brackets": brackets}


def parse_lie_algebra(obj, where: str = "lie_algebra") -> LieAlgebra:
    d = _as_dict(obj, where)
    _expect_kind(d, "lie_algebra", where)
    dim = _as_int(_field(d, "dim", where), f"{where}.dim")
    if dim < 0:
        raise MalformedInputError(f"{where}.dim: must be nonnegative")
    basis_obj = _as_list(_field(d, "basis", where), f"{where}.basis")
    if len(basis_obj) != dim:
        raise MalformedInputError(
            f"{where}.basis: expected {dim} names, got {len(basis_obj)}")
    basis = [_as_str(v, f"{where}.basis[{i}]") for i, v in enumerate(basis_obj)]

    sparse: dict[tuple[int, int], dict[int, Fraction]] = {}
    entries = _as_list(d.get("brackets", []), f"{where}.brackets")
    for idx, entry_obj in enumerate(entries):
        loc = f"{where}.brackets[{idx}]"
        entry = _as_dict(entry_obj, loc)
        i = _as_int(_field(entry, "i", loc), f"{loc}.i")
        j = _as_int(_field(entry, "j", loc), f"{loc}.j")
        if not 0 <= i < j < dim:
            raise MalformedInputError(
                f"{loc}: pair ({i},{j}) must satisfy 0 <= i < j < {dim}")
        if (i, j) in sparse:
            raise MalformedInputError(f"{loc}: duplicate pair ({i},{j})")
        terms: dict[int, Fraction] = {}
        for t, term_obj in enumerate(
                _as_list(_field(entry, "terms", loc), f"{loc}.terms")):
            term = _as_list(term_obj, f"{loc}.terms[{t}]")
            if len(term) != 2:
                raise MalformedInputError(
                    f"{loc}.terms[{t}]: expected [index, rational]")
            k = _index(term[0], dim, f"{loc}.terms[{t}][0]")
            if k in terms:
                raise MalformedInputError(
                    f"{loc}.terms[{t}]: duplicate basis index {k}")
            terms[k] = parse_fraction(term[1], f"{loc}.terms[{t}][1]")
        sparse[(i, j)] = terms
    return LieAlgebra.from_sparse(basis, sparse)


# ------------------------------------------------------ Rota-Baxter operators


def rb_lie_to_dict(rb: RotaBaxterLie) -> dict:
    return {"kind": "rb_lie", "weight": str(rb.weight),
            "algebra": lie_algebra_to_dict(rb.algebra),
            "operator": {"matrix": matrix_to_rows(rb.operator)}}


def parse_rb_lie(obj, where: str = "rb_lie") -> RotaBaxterLie:
    d = _as_dict(obj, where)
    _expect_kind(d, "rb_lie", where)
    weight = parse_fraction(_field(d, "weight", where), f"{where}.weight")
    algebra = parse_lie_algebra(_field(d, "algebra", where), f"{where}.algebra")
    op = _as_dict(_field(d, "operator", where), f"{where}.operator")
    matrix = parse_matrix(_field(op, "matrix", f"{where}.operator"),
                          algebra.dim, algebra.dim, f"{where}.operator.matrix")
    return RotaBaxterLie(algebra, matrix, weight)


# -------------------------------------------------------- matched pairs (Lie)


def matched_pair_lie_to_dict(mp: MatchedPairLie) -> dict:
    p, q = mp.g_plus.dim, mp.g_minus.dim
    rhd = []
    for i in range(p):
        for a in range(q):
            terms = [[b, str(c)] for b, c in enumerate(mp.rhd[i][a]) if c]
            if terms:
                rhd.append([i, a, terms])
    brhd = []
    for a in range(q):
        for i in range(p):
            terms = [[j, str(c)] for j, c in enumerate(mp.brhd[a][i]) if c]
            if terms:
                brhd.append([a, i, terms])
    return {"kind": "matched_pair_lie",
            "g_plus": lie_algebra_to_dict(mp.g_plus),
            "g_minus": lie_algebra_to_dict(mp.g_minus),
            "rhd": rhd, "brhd": brhd}


def _parse_action_entries(obj, rows: int, cols: int, out_dim: int,
                          where: str) -> tuple[tuple[tuple, ...], ...]:
    """Sparse [row, col, [[k, "p/q"], ...]] entries into a dense tensor."""
    dense = [[list(vzero(out_dim)) for _ in range(cols)] for _ in range(rows)]
    seen: set[tuple[int, int]] = set()
    for idx, entry_obj in enumerate(_as_list(obj, where)):
        loc = f"{where}[{idx}]"
        entry = _as_list(entry_obj, loc)
        if len(entry) != 3:
            raise MalformedInputError(
                f"{loc}: expected [row, col, terms] triple")
        r = _index(entry[0], rows, f"{loc}[0]")
        c = _index(entry[1], cols, f"{loc}[1]")
        if (r, c) in seen:
            raise MalformedInputError(f"{loc}: duplicate pair ({r},{c})")
        seen.add((r, c))
        for t, term_obj in enumerate(_as_list(entry[2], f"{loc}[2]")):
            term = _as_list(term_obj, f"{loc}[2][{t}]")
            if len(term) != 2:
                raise MalformedInputError(
                    f"{loc}[2][{t}]: expected [index, rational]")
            k = _index(term[0], out_dim, f"{loc}[2][{t}][0]")
            dense[r][c][k] = parse_fraction(term[1], f"{loc}[2][{t}][1]")
    return tuple(tuple(tuple(v) for v in row) for row in dense)


def parse_matched_pair_lie(obj, where: str = "matched_pair_lie") -> MatchedPairLie:
    d = _as_dict(obj, where)
    _expect_kind(d, "matched_pair_lie", where)
    g_plus = parse_lie_algebra(_field(d, "g_plus", where), f"{where}.g_plus")
    g_minus = parse_lie_algebra(_field(d, "g_minus", where), f"{where}.g_minus")
    p, q = g_plus.dim, g_minus.dim
    rhd = _parse_action_entries(d.get("rhd", []), p, q, q, f"{where}.rhd")
    brhd = _parse_action_entries(d.get("brhd", []), q, p, p, f"{where}.brhd")
    return MatchedPairLie(g_plus, g_minus, rhd, brhd)


# --------------------------------------------------------- quadratic bundles


def quadratic_to_dict(q: QuadraticRB) -> dict:
    return {"kind": "quadratic_rb", "rb": rb_lie_to_dict(q.rb),
            "form": matrix_to_rows(q.form)}


def parse_quadratic(obj, where: str = "quadratic_rb") -> QuadraticRB:
    d = _as_dict(obj, where)
    _expect_kind(d, "quadratic_rb", where)
    rb = parse_rb_lie(_field(d, "rb", where), f"{where}.rb")
    n = rb.algebra.dim
    form = parse_matrix(_field(d, "form", where), n, n, f"{where}.form")
    return QuadraticRB(rb, form)


# -------------------------------------------------------------------- groups


def group_to_dict(g: FiniteGroup) -> dict:
    return {"kind": "group", "order": g.order, "elements": list(g.labels),
            "table": [list(row) for row in g.table]}


def parse_group_payload(obj, where: str = "group"
                        ) -> tuple[tuple[str, ...], list[list[int]]]:
    """Shape-check a group file without judging the group axioms.

    Returns labels and the raw table so callers can run axiom validation
    separately: a table of the right shape that fails the group laws is a
    refutation, not malformed input.
    """
    d = _as_dict(obj, where)
    _expect_kind(d, "group", where)
    order = _as_int(_field(d, "order", where), f"{where}.order")
    if order < 1:
        raise MalformedInputError(f"{where}.order: must be positive")
    elements = _as_list(_field(d, "elements", where), f"{where}.elements")
    if len(elements) != order:
        raise MalformedInputError(
            f"{where}.elements: expected {order} names, got {len(elements)}")
    labels = tuple(_as_str(v, f"{where}.elements[{i}]")
                   for i, v in enumerate(elements))
    table = [list(row) for row in _int_table(
        _field(d, "table", where), order, order, order, f"{where}.table")]
    return labels, table


def _find_identity(table: Sequence[Sequence[int]]) -> int | None:
    n = len(table)
    for e in range(n):
        if all(table[e][j] == j and table[j][e] == j for j in range(n)):
            return e
    return None


def load_group(obj, where: str = "group"
               ) -> tuple[FiniteGroup, tuple[int, ...] | None, Report]:
    """Parse, validate, and normalize a group file.

    The identity is pinned at index 0: a table whose identity sits elsewhere
    is relabeled, and the applied permutation (old index -> new index) is
    returned and recorded in the report data.  Axiom failures raise
    :class:`AxiomsFailedError` carrying the validation report.
    """
    labels, table = parse_group_payload(obj, where)
    n = len(table)
    e = _find_identity(table)
    perm: tuple[int, ...] | None = None
    if e is not None and e != 0:
        order = [e] + [i for i in range(n) if i != e]
        old_to_new = [0] * n
        for new, old in enumerate(order):
            old_to_new[old] = new
        relabeled = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                relabeled[old_to_new[i]][old_to_new[j]] = old_to_new[table[i][j]]
        labels = tuple(labels[old] for old in order)
        table = relabeled
        perm = tuple(old_to_new)

    report = validate_group(table)
    if perm is not None:
        report.data["relabeling"] = list(perm)
    if not report.ok:
        raise AxiomsFailedError(f"{where}: table fails the group axioms",
                                report)
    group = FiniteGroup(labels, tuple(tuple(row) for row in table))
    return group, perm, report


def group_map_to_dict(m: GroupMap) -> dict:
    return {"kind": "group_map", "values": list(m.values)}


def parse_group_map(obj, source: FiniteGroup, target: FiniteGroup,
                    where: str = "group_map") -> GroupMap:
    d = _as_dict(obj, where)
    _expect_kind(d, "group_map", where)
    values_obj = _as_list(_field(d, "values", where), f"{where}.values")
    if len(values_obj) != source.order:
        raise MalformedInputError(
            f"{where}.values: expected {source.order} values, "
            f"got {len(values_obj)}")
    values = tuple(_index(v, target.order, f"{where}.values[{i}]")
                   for i, v in enumerate(values_obj))
    return GroupMap(source, target, values)


def relabel_map_values(values: Sequence[int],
                       perm: Sequence[int]) -> tuple[int, ...]:
    """Transport a self-map's value table along a relabeling permutation.

    ``perm[old]`` is the new index of input element ``old``; the returned
    table satisfies ``out[perm[a]] = perm[values[a]]``.
    """
    out = [0] * len(values)
    for old, val in enumerate(values):
        out[perm[old]] = perm[val]
    return tuple(out)


# ------------------------------------------------------ matched pairs (group)


def matched_pair_group_to_dict(mp: MatchedPairGroup) -> dict:
    return {"kind": "matched_pair_group",
            "g_plus": group_to_dict(mp.g_plus),
            "g_minus": group_to_dict(mp.g_minus),
            "rho": [list(row) for row in mp.rho],
            "mu": [list(row) for row in mp.mu]}


def parse_matched_pair_group(obj, where: str = "matched_pair_group"
                             ) -> MatchedPairGroup:
    d = _as_dict(obj, where)
    _expect_kind(d, "matched_pair_group", where)
    g_plus, perm_p, _ = load_group(_field(d, "g_plus", where),
                                   f"{where}.g_plus")
    g_minus, perm_m, _ = load_group(_field(d, "g_minus", where),
                                    f"{where}.g_minus")
    p, q = g_plus.order, g_minus.order
    rho = _int_table(_field(d, "rho", where), p, q, q, f"{where}.rho")
    mu = _int_table(_field(d, "mu", where), q, p, p, f"{where}.mu")
    if perm_p is not None or perm_m is not None:
        pp = perm_p or tuple(range(p))
        pm = perm_m or tuple(range(q))
        new_rho = [[0] * q for _ in range(p)]
        new_mu = [[0] * p for _ in range(q)]
        for a in range(p):
            for b in range(q):
                new_rho[pp[a]][pm[b]] = pm[rho[a][b]]
                new_mu[pm[b]][pp[a]] = pp[mu[b][a]]
        rho = tuple(tuple(row) for row in new_rho)
        mu = tuple(tuple(row) for row in new_mu)
    return MatchedPairGroup(g_plus, g_minus, rho, mu)


# -------------------------------------------------------------------- census


def census_to_dict(g: FiniteGroup, operators: Sequence[GroupMap],
                   mode: str) -> dict:
    return {"kind": "rb_census", "group": group_to_dict(g),
            "operators": [{"values": list(m.values)} for m in operators],
            "count": len(operators), "mode": mode}


# ------------------------------------------------------------------- reports


def report_to_artifact(report: Report) -> dict:
    """Render a report in the decomposition-artifact schema.

    Dimension/order fields and any extra data keys are lifted to the top
    level; the check list is emitted under ``certificates``.
    """
    out: dict = {"kind": "decomposition_report", "subject": report.subject,
                 "ok": report.ok}
    for key in sorted(report.data):
        out[key] = report.data[key]
    out["certificates"] = [c.to_dict() for c in report.checks]
    return out


# ----------------------------------------------------------------- file glue


def dump_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def write_json(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dump_json(payload))


def read_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{path}: not valid JSON ({exc})")

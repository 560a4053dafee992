"""Instance, solution and ranking-profile file formats.

Instance file::

    FAST v1 n=3
    # optional comment lines (generator provenance) directly after the header
    010
    001
    100

Character ``j`` of matrix line ``i`` is ``1`` iff arc ``i -> j``.

Solution files are JSON objects with ``opt_size``, ``order``, ``fas`` and
``trials`` plus a ``solver`` version string.

Ranking profiles: first line ``m n``, then ``m`` lines each listing the ``n``
alternatives from most to least preferred.
"""

from __future__ import annotations

import json
import re
from typing import Sequence

from . import __version__
from .solver import SolveResult
from .tournament import InputError, Tournament, backward_arcs, check_order

HEADER = re.compile(r"FAST v1 n=(\d+)")


class ParseError(InputError):
    def __init__(self, message: str, line: int, column: int | None = None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


class HeaderError(ParseError):
    pass


class ShapeError(ParseError):
    pass


class DiagonalError(ParseError):
    pass


class AntisymmetryError(ParseError):
    pass


class CharacterError(ParseError):
    pass


def parse_instance(data: str | bytes) -> Tournament:
    if isinstance(data, bytes):
        try:
            data = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise CharacterError("non-ASCII byte", 1) from exc
    lines = data.splitlines()
    if not lines:
        raise HeaderError("empty input", 1)
    m = HEADER.fullmatch(lines[0].strip())
    if not m:
        raise HeaderError(f"expected 'FAST v1 n=<n>', got {lines[0]!r}", 1)
    n = int(m.group(1))
    if n < 1:
        raise HeaderError("n must be positive", 1)
    body = []
    for lineno, line in enumerate(lines[1:], start=2):
        if line.startswith("#") and not body:
            continue
        if not line.strip():
            continue
        body.append((lineno, line.rstrip("\r")))
    if len(body) != n:
        raise ShapeError(f"expected {n} matrix rows, found {len(body)}", body[-1][0] if body else 1)
    rows = []
    for lineno, line in body:
        for col, ch in enumerate(line, start=1):
            if ch not in "01":
                raise CharacterError(f"unexpected character {ch!r}", lineno, col)
        if len(line) != n:
            raise ShapeError(f"row has {len(line)} entries, expected {n}", lineno)
        rows.append(line)
    for i, (lineno, _) in enumerate(body):
        if rows[i][i] != "0":
            raise DiagonalError(f"diagonal entry ({i},{i}) is 1", lineno, i + 1)
        for j in range(i + 1, n):
            if rows[i][j] == rows[j][i]:
                what = "both" if rows[i][j] == "1" else "neither"
                raise AntisymmetryError(f"{what} of arcs {i}->{j} and {j}->{i} present", lineno, j + 1)
    return Tournament.from_matrix([[int(c) for c in row] for row in rows])


def emit_instance(t: Tournament, comments: Sequence[str] = ()) -> str:
    lines = [f"FAST v1 n={t.n}"]
    lines += [f"# {c}" for c in comments]
    lines += ["".join(str(b) for b in row) for row in t.matrix()]
    return "\n".join(lines) + "\n"


def solution_dict(result: SolveResult) -> dict:
    return {
        "opt_size": result.opt_size,
        "order": list(result.order),
        "fas": sorted([u, v] for u, v in result.fas),
        "trials": [tr.as_dict() for tr in result.trials],
        "solver": f"tourfas {__version__}",
    }


def emit_solution(result: SolveResult) -> str:
    return json.dumps(solution_dict(result), indent=2) + "\n"


def check_solution(t: Tournament, data: str | dict) -> list[str]:
    """Problems with a solution file for instance ``t``; empty when it is valid."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            return [f"not valid JSON: {exc}"]
    problems = []
    for key in ("opt_size", "order", "fas"):
        if key not in data:
            problems.append(f"missing field {key!r}")
    if problems:
        return problems
    try:
        order = check_order(t, data["order"])
    except (InputError, TypeError) as exc:
        return [str(exc)]
    try:
        fas = {(int(u), int(v)) for u, v in data["fas"]}
    except (TypeError, ValueError):
        return ["fas entries must be [u, v] pairs"]
    if len(fas) != len(data["fas"]):
        problems.append("fas lists an arc twice")
    expected = backward_arcs(t, order)
    if fas != expected:
        problems.append(f"fas differs from the backward arcs of order ({len(fas)} vs {len(expected)})")
    if data["opt_size"] != len(data["fas"]):
        problems.append(f"opt_size {data['opt_size']} != |fas| {len(data['fas'])}")
    return problems


def parse_rankings(data: str) -> list[tuple[int, ...]]:
    lines = [ln for ln in data.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty ranking profile", 1)
    try:
        m, n = (int(x) for x in lines[0].split())
    except ValueError as exc:
        raise ParseError(f"expected 'm n', got {lines[0]!r}", 1) from exc
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} rankings, found {len(lines) - 1}", len(lines))
    rankings = []
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            r = tuple(int(x) for x in line.split())
        except ValueError as exc:
            raise ParseError(f"non-integer alternative in {line!r}", lineno) from exc
        if sorted(r) != list(range(n)):
            raise ParseError(f"ranking is not a permutation of 0..{n - 1}", lineno)
        rankings.append(r)
    return rankings


def majority_tournament(rankings: Sequence[Sequence[int]]) -> Tournament:
    """Arc u -> v iff a strict majority of voters rank u above v."""
    m = len(rankings)
    if m == 0 or m % 2 == 0:
        raise InputError(f"need an odd number of voters, got {m}")
    n = len(rankings[0])
    wins = [[0] * n for _ in range(n)]
    for r in rankings:
        if sorted(r) != list(range(n)):
            raise InputError(f"ranking {tuple(r)} is not a permutation of 0..{n - 1}")
        for a in range(n):
            for b in range(a + 1, n):
                wins[r[a]][r[b]] += 1
    return Tournament.from_matrix([[int(2 * wins[u][v] > m) for v in range(n)] for u in range(n)])

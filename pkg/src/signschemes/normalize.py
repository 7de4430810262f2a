"""Certificate construction: rewriting a generated scheme into the target.

The builder processes columns k = 1..n in order. Columns left of k are
already repaired, and the moves collected so far are reshaped to absorb
column k's wrong entries:

  * Scan column k bottom to top for wrong '-' entries (these sit at rows
    with i + k odd). For each, look at V = the sum of the signs below it
    in the ORIGINAL column. V is odd, so either:
      - V > 0: pair the entry with the nearest wrong '+' below it in the
        working column and add a Vertical move, or
      - V < 0: take the latest earlier move that ends at this row (a
        Point(i;j) or a Vertical(top,i;j) with j < k) and widen it in
        place into a Horizontal(i;j,k) or Square(top,i;j,k). A widened
        move also corrects the wrong '+' at (top,k), which the counting
        identities guarantee is present.
  * Finally add a Point move for every wrong '+' still left in the
    working column, bottom row first.

Each flip turns a wrong entry into a correct one and no position is
touched twice, so the touched sets are disjoint and cover exactly the
wrong set. V == 0, a missing pairing partner, a missing widening target,
or a missing fourth corner would contradict the counting identities;
those paths raise AlgorithmInvariantError and are bug signals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import AlgorithmInvariantError, DimensionError
from .moves import POINT, VERTICAL, Certificate, Move
from .schemes import (
    MINUS,
    PLUS,
    as_sign_vector,
    generate_scheme,
    reference_sign,
    sign_char,
)

OP_VERTICAL = "vertical"
OP_SUBSTITUTE = "substitute"
OP_POINT = "point"
OP_LEVEL = "level"


@dataclass(frozen=True)
class TraceStep:
    """One recorded builder event.

    op is one of the OP_* constants; flipped lists the column positions
    the event corrected (scanned row first); column is the working column
    after the event; moves is the move list after the event.
    """

    level: int
    op: str
    action: str
    flipped: tuple[tuple[int, int], ...]
    column: tuple[int, ...]
    moves: tuple[Move, ...]


def _column_of(eps, k: int) -> list[int]:
    """Column k of the generated scheme: entry i is eps[i]*...*eps[k]."""
    col = [0] * k
    prod = 1
    for i in range(k, 0, -1):
        prod *= eps[i - 1]
        col[i - 1] = prod
    return col


def _build(eps, steps: list[TraceStep] | None) -> list[Move]:
    eps = as_sign_vector(eps)
    n = len(eps)
    moves: list[Move] = []

    def emit(level, op, action, flipped, work):
        if steps is not None:
            steps.append(
                TraceStep(level, op, action, tuple(flipped), tuple(work), tuple(moves))
            )

    for k in range(1, n + 1):
        col = _column_of(eps, k)
        # suffix[i] = sum of the original column below row i (rows i+1..k)
        suffix = [0] * (k + 2)
        for i in range(k, 0, -1):
            suffix[i] = suffix[i + 1] + col[i - 1]
        work = col[:]

        for i in range(k, 0, -1):
            if work[i - 1] != MINUS or reference_sign(i, k) == MINUS:
                continue
            below = suffix[i + 1]
            if below > 0:
                i2 = next(
                    (
                        v
                        for v in range(i + 1, k + 1)
                        if work[v - 1] == PLUS and reference_sign(v, k) == MINUS
                    ),
                    None,
                )
                if i2 is None:
                    raise AlgorithmInvariantError(
                        f"no wrong '+' below row {i} in column {k} despite V > 0"
                    )
                mv = Move.vertical(i, i2, k)
                moves.append(mv)
                work[i - 1] = -work[i - 1]
                work[i2 - 1] = -work[i2 - 1]
                emit(k, OP_VERTICAL, f"add {mv}", ((i, k), (i2, k)), work)
            elif below < 0:
                best = None
                for idx, m in enumerate(moves):
                    if m.j >= k:
                        continue
                    if (m.kind == POINT and m.i == i) or (
                        m.kind == VERTICAL and m.i2 == i
                    ):
                        if best is None or m.j > moves[best].j:
                            best = idx
                if best is None:
                    raise AlgorithmInvariantError(
                        f"no move to widen for row {i} in column {k} despite V < 0"
                    )
                old = moves[best]
                if old.kind == POINT:
                    new = Move.horizontal(i, old.j, k)
                    moves[best] = new
                    work[i - 1] = -work[i - 1]
                    flipped = ((i, k),)
                else:
                    top = old.i
                    if work[top - 1] != PLUS or reference_sign(top, k) != MINUS:
                        raise AlgorithmInvariantError(
                            f"fourth corner ({top}, {k}) is not a wrong '+' "
                            f"when widening {old}"
                        )
                    new = Move.square(top, i, old.j, k)
                    moves[best] = new
                    work[i - 1] = -work[i - 1]
                    work[top - 1] = -work[top - 1]
                    flipped = ((i, k), (top, k))
                emit(k, OP_SUBSTITUTE, f"replace {old} with {new}", flipped, work)
            else:
                raise AlgorithmInvariantError(
                    f"V = 0 at wrong '-' ({i}, {k}); the column sum must be odd"
                )

        for i in range(1, k + 1):
            if work[i - 1] == PLUS and reference_sign(i, k) == MINUS:
                mv = Move.point(i, k)
                moves.append(mv)
                work[i - 1] = -work[i - 1]
                emit(k, OP_POINT, f"add {mv}", ((i, k),), work)

        for i in range(1, k + 1):
            if work[i - 1] != reference_sign(i, k):
                raise AlgorithmInvariantError(
                    f"column {k} not repaired at row {i} after processing"
                )
        emit(k, OP_LEVEL, f"column {k} complete", (), work)

    return moves


def build_certificate(eps) -> Certificate:
    """Moves transforming the scheme generated by eps into the target.

    The order is deterministic: earlier-column moves keep their positions
    when widened in place, each column's Vertical moves follow in scan
    order (bottom to top), and its Point moves come last, top to bottom.
    """
    eps = as_sign_vector(eps)
    return Certificate(eps, tuple(_build(eps, None)))


def trace_build(eps) -> tuple[TraceStep, ...]:
    """Like build_certificate, but recording every builder event.

    Emits one step per corrective action plus one closing step per
    column; the last step's move list is the full certificate.
    """
    steps: list[TraceStep] = []
    _build(as_sign_vector(eps), steps)
    return tuple(steps)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of replaying a certificate against a generated scheme."""

    eps: tuple[int, ...]
    source_matches: bool
    disjoint: bool
    preconditions_ok: bool
    final_is_reference: bool
    residual_wrong: tuple[tuple[int, int], ...]
    failures: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.eps)

    @property
    def accepted(self) -> bool:
        return (
            self.source_matches
            and self.disjoint
            and self.preconditions_ok
            and self.final_is_reference
        )


def check_certificate(eps, cert: Certificate) -> CheckReport:
    """Replay cert from the scheme generated by eps and report the outcome.

    Checks that the certificate names the same sign vector, that no two
    moves touch the same position, that every move's sign pattern is
    present when the move is applied in sequence, and that the final
    scheme is the target. Nothing is raised for a bad certificate; a
    dimension mismatch between eps and cert is a usage error and does
    raise.
    """
    eps = as_sign_vector(eps)
    n = len(eps)
    if cert.n != n:
        raise DimensionError(f"certificate is for n={cert.n}, input has n={n}")
    failures: list[str] = []
    source_matches = cert.eps == eps
    if not source_matches:
        failures.append("certificate sign vector differs from the input vector")

    # mutable copy of the generated scheme, grid[i-1][j-i] as in Scheme
    grid = [list(row) for row in generate_scheme(eps).rows]
    seen: set[tuple[int, int]] = set()
    disjoint = True
    preconditions_ok = True
    for idx, move in enumerate(cert.moves):
        positions = move.touched_positions()
        out_of_range = [p for p in positions if not (1 <= p[0] <= p[1] <= n)]
        if out_of_range:
            preconditions_ok = False
            failures.append(
                f"move {idx} {move}: position {out_of_range[0]} outside triangle"
            )
            continue
        overlap = [p for p in positions if p in seen]
        if overlap:
            disjoint = False
            failures.append(
                f"move {idx} {move}: position {overlap[0]} already touched"
            )
        seen.update(positions)
        mismatch = None
        for pos, req in zip(positions, move.required_signs()):
            found = grid[pos[0] - 1][pos[1] - pos[0]]
            if found != req:
                mismatch = (pos, req, found)
                break
        if mismatch is not None:
            pos, req, found = mismatch
            preconditions_ok = False
            failures.append(
                f"move {idx} {move}: needs '{sign_char(req)}' at {pos}, "
                f"found '{sign_char(found)}'"
            )
            continue
        for pos in positions:
            grid[pos[0] - 1][pos[1] - pos[0]] *= -1

    residual = tuple(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i, n + 1)
        if grid[i - 1][j - i] != reference_sign(i, j)
    )
    return CheckReport(
        eps=eps,
        source_matches=source_matches,
        disjoint=disjoint,
        preconditions_ok=preconditions_ok,
        final_is_reference=not residual,
        residual_wrong=residual,
        failures=tuple(failures),
    )


def render_trace(eps, steps) -> str:
    """Plain-text trace: per column, the already-built part of the scheme
    beside the original column, with the scanned wrong '-' rows bracketed,
    then the move list at that stage.
    """
    eps = as_sign_vector(eps)
    n = len(eps)
    by_level: dict[int, list[TraceStep]] = {k: [] for k in range(1, n + 1)}
    for s in steps:
        by_level[s.level].append(s)
    lines: list[str] = []
    for k in range(1, n + 1):
        level_steps = by_level[k]
        marks = {
            s.flipped[0][0]
            for s in level_steps
            if s.op in (OP_VERTICAL, OP_SUBSTITUTE)
        }
        col = _column_of(eps, k)
        left_rows = (
            generate_scheme(eps[: k - 1]).render().split("\n") if k > 1 else []
        )
        width = max((len(r) for r in left_rows), default=0)
        for i in range(1, k + 1):
            left = left_rows[i - 1] if i - 1 < len(left_rows) else ""
            ch = sign_char(col[i - 1])
            cell = f"[{ch}]" if i in marks else f" {ch} "
            prefix = f"{left:<{width}} |" if width else "|"
            lines.append((prefix + cell).rstrip())
        moves = level_steps[-1].moves if level_steps else ()
        lines.append(f"L({k}) = {{{', '.join(str(m) for m in moves)}}}")
        lines.append("")
    return "\n".join(lines[:-1])


def trace_to_obj(eps, steps) -> dict:
    return {
        "eps": list(as_sign_vector(eps)),
        "steps": [
            {
                "level": s.level,
                "op": s.op,
                "action": s.action,
                "flipped": [list(p) for p in s.flipped],
                "column": list(s.column),
                "moves": [m.to_obj() for m in s.moves],
            }
            for s in steps
        ],
    }


def trace_to_json(eps, steps) -> str:
    return json.dumps(trace_to_obj(eps, steps), separators=(",", ":"))

"""Triangular sign schemes generated by sign vectors.

A scheme of size n assigns a sign to every pair (i, j) with
1 <= i <= j <= n, arranged as a triangle: row i holds the signs
(i, i), (i, i+1), ..., (i, n). The schemes of interest are generated
from a sign vector eps by taking consecutive products,

    C[i, j] = eps[i] * eps[i+1] * ... * eps[j],

and the distinguished target scheme alternates along each row starting
with a minus on the diagonal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import DimensionError, DomainError, TriangleIndexError

PLUS = 1
MINUS = -1

_SIGN_CHARS = {PLUS: "+", MINUS: "-"}

_PARSE_TOKENS = {"+": PLUS, "+1": PLUS, "1": PLUS, "-": MINUS, "-1": MINUS}


def sign_char(s: int) -> str:
    """'+' or '-' for a sign value."""
    try:
        return _SIGN_CHARS[s]
    except KeyError:
        raise DomainError(f"not a sign: {s!r}") from None


def as_sign_vector(values) -> tuple[int, ...]:
    """Validate and freeze a sequence of +1/-1 entries."""
    eps = tuple(values)
    if not eps:
        raise DimensionError("sign vector must be non-empty")
    for v in eps:
        if v not in (PLUS, MINUS):
            raise DomainError(f"sign vector entries must be +1 or -1, got {v!r}")
    return eps


def parse_signs(text: str) -> tuple[int, ...]:
    """Parse a sign vector from text like '+ - +', '+1,-1,+1' or '+-+'.

    Accepts the tokens +, -, +1, -1, 1 separated by whitespace or commas;
    a string of bare +/- characters with no separators also works.
    """
    cleaned = text.replace(",", " ").strip()
    if not cleaned:
        raise DimensionError("empty sign vector")
    tokens = cleaned.split()
    if len(tokens) == 1 and set(tokens[0]) <= {"+", "-"} and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    out = []
    for tok in tokens:
        if tok not in _PARSE_TOKENS:
            raise DomainError(f"cannot parse sign token {tok!r}")
        out.append(_PARSE_TOKENS[tok])
    return tuple(out)


def format_signs(eps) -> str:
    return " ".join(sign_char(v) for v in eps)


class WrongCounts(NamedTuple):
    """Counts of incorrectly signed entries in a row and column tail.

    For a position (i, j): h_* count entries (i, u) with i <= u < j,
    v_* count entries (v, j) with i < v <= j, split by the sign the
    entry actually carries.
    """

    h_plus: int
    h_minus: int
    v_plus: int
    v_minus: int
    h: int
    v: int


@dataclass(frozen=True)
class Scheme:
    """An immutable triangular sign scheme.

    rows[i-1] holds row i; rows[i-1][j-i] is the sign at position (i, j).
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0:
            raise DimensionError("scheme must have at least one row")
        for idx, row in enumerate(self.rows):
            if len(row) != n - idx:
                raise DimensionError(
                    f"row {idx + 1} has length {len(row)}, expected {n - idx}"
                )
            for v in row:
                if v not in (PLUS, MINUS):
                    raise DomainError(f"scheme entries must be +1 or -1, got {v!r}")

    @property
    def n(self) -> int:
        return len(self.rows)

    def check_position(self, i: int, j: int) -> None:
        if not (1 <= i <= j <= self.n):
            raise TriangleIndexError(
                f"position ({i}, {j}) outside triangle of size {self.n}"
            )

    def sign(self, i: int, j: int) -> int:
        self.check_position(i, j)
        return self.rows[i - 1][j - i]

    def positions(self) -> Iterator[tuple[int, int]]:
        """All (i, j) with 1 <= i <= j <= n, row by row."""
        for i in range(1, self.n + 1):
            for j in range(i, self.n + 1):
                yield i, j

    def with_flipped(self, positions) -> "Scheme":
        """A copy with the signs at the given positions negated."""
        rows = [list(row) for row in self.rows]
        for i, j in positions:
            self.check_position(i, j)
            rows[i - 1][j - i] = -rows[i - 1][j - i]
        return Scheme(tuple(tuple(row) for row in rows))

    def render(self) -> str:
        """ASCII triangle, one row per line, indented to align columns."""
        lines = []
        for i, row in enumerate(self.rows, start=1):
            lines.append("  " * (i - 1) + " ".join(sign_char(v) for v in row))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()


def generate_scheme(eps) -> Scheme:
    """The scheme with C[i, j] = eps[i] * ... * eps[j].

    Computed with running products along each row, O(n^2) total.
    """
    eps = as_sign_vector(eps)
    n = len(eps)
    rows = []
    for i in range(1, n + 1):
        row = []
        prod = 1
        for j in range(i, n + 1):
            prod *= eps[j - 1]
            row.append(prod)
        rows.append(tuple(row))
    return Scheme(tuple(rows))


def reference_sign(i: int, j: int) -> int:
    """Sign at (i, j) in the target scheme: minus on the diagonal, alternating."""
    return MINUS if (j - i) % 2 == 0 else PLUS


def reference_scheme(n: int) -> Scheme:
    """The target scheme of size n, generated by the all-minus vector."""
    if n < 1:
        raise DimensionError(f"scheme size must be positive, got {n}")
    return generate_scheme((MINUS,) * n)


def wrong_set(scheme: Scheme) -> frozenset[tuple[int, int]]:
    """Positions whose sign differs from the target scheme."""
    return frozenset(
        (i, j)
        for i, j in scheme.positions()
        if scheme.sign(i, j) != reference_sign(i, j)
    )


def is_reference(scheme: Scheme) -> bool:
    for i, j in scheme.positions():
        if scheme.sign(i, j) != reference_sign(i, j):
            return False
    return True


def horizontal_sum(scheme: Scheme, i: int, j: int) -> int:
    """Sum of the signs C[i, u] for i <= u < j."""
    scheme.check_position(i, j)
    return sum(scheme.rows[i - 1][: j - i])


def vertical_sum(scheme: Scheme, i: int, j: int) -> int:
    """Sum of the signs C[v, j] for i < v <= j."""
    scheme.check_position(i, j)
    return sum(scheme.sign(v, j) for v in range(i + 1, j + 1))


def wrong_counts(scheme: Scheme, i: int, j: int) -> WrongCounts:
    """Counts of wrongly signed entries left of and below (i, j).

    Splits the row segment (i, u), i <= u < j, and the column segment
    (v, j), i < v <= j, by the sign each wrong entry carries.
    """
    scheme.check_position(i, j)
    h_plus = h_minus = 0
    for u in range(i, j):
        s = scheme.sign(i, u)
        if s != reference_sign(i, u):
            if s == PLUS:
                h_plus += 1
            else:
                h_minus += 1
    v_plus = v_minus = 0
    for v in range(i + 1, j + 1):
        s = scheme.sign(v, j)
        if s != reference_sign(v, j):
            if s == PLUS:
                v_plus += 1
            else:
                v_minus += 1
    return WrongCounts(
        h_plus, h_minus, v_plus, v_minus, h_plus - h_minus, v_plus - v_minus
    )


def square_sign_product(scheme: Scheme, i: int, i2: int, j: int, j2: int) -> int:
    """Product C[i,j] * C[i2,j] * C[i,j2] * C[i2,j2] for i < i2 < j < j2.

    For generated schemes this is always +1: each factor is a consecutive
    product of eps entries and every eps entry appears an even number of
    times across the four corners.
    """
    if not (i < i2 < j < j2):
        raise TriangleIndexError(
            f"square corners need i < i2 < j < j2, got ({i}, {i2}; {j}, {j2})"
        )
    scheme.check_position(i, j)
    scheme.check_position(i2, j2)
    return (
        scheme.sign(i, j)
        * scheme.sign(i2, j)
        * scheme.sign(i, j2)
        * scheme.sign(i2, j2)
    )


def all_sign_vectors(n: int) -> Iterator[tuple[int, ...]]:
    """All 2^n sign vectors of length n, plus-first lexicographic order."""
    if n < 1:
        raise DimensionError(f"sign vector length must be positive, got {n}")
    return itertools.product((PLUS, MINUS), repeat=n)

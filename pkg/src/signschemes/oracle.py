"""Brute-force and sampling corroboration of the package's quantitative claims.

Everything here re-derives facts the library's algebra already implies:
the cube-product maximum and its attaining points, the algebraic
identities of generated schemes, the four factor inequalities, and the
monotonicity of rewrite moves along built certificates. The point is
independence: these routines only use the evaluators and enumerate or
sample, so they would catch a bug in the clever parts.

All randomness comes from numpy's seeded generator; every report records
the seed it was produced with.
"""

from __future__ import annotations

import dataclasses
import itertools
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import BoundViolationError, DomainError, ResourceLimitError
from .evaluate import (
    FACTOR_TOL,
    PRODUCT_TOL,
    check_factor_inequality,
    eval_f_batch,
    eval_q,
    eval_q_batch,
)
from .moves import apply_move
from .normalize import build_certificate
from .schemes import (
    MINUS,
    PLUS,
    all_sign_vectors,
    generate_scheme,
    horizontal_sum,
    is_reference,
    square_sign_product,
    vertical_sum,
    wrong_counts,
)

_BATCH = 250_000
_GRID_POINT_CAP = 40_000_000


def qmax_bound(n: int) -> int:
    """The proven maximum of the n-variable cube product: 2^floor((n+1)/2)."""
    if n < 1:
        raise DomainError(f"dimension must be positive, got {n}")
    return 2 ** ((n + 1) // 2)


def candidate_maximizers(n: int) -> tuple[tuple[int, ...], ...]:
    """The known maximizing points, with coordinates in {-1, 0}.

    Odd n has the single alternating point (-1, 0, -1, 0, ...); even n
    has the n/2 + 1 block patterns [-1,0]*k + [0,-1]*(n/2 - k).
    """
    if n < 1:
        raise DomainError(f"dimension must be positive, got {n}")
    if n % 2 == 1:
        return (tuple(-1 if i % 2 == 0 else 0 for i in range(n)),)
    half = n // 2
    return tuple(
        tuple([-1, 0] * k + [0, -1] * (half - k)) for k in range(half + 1)
    )


@dataclass(frozen=True)
class MaxReport:
    """Best cube-product value found by one search method."""

    n: int
    best_value: float
    best_point: tuple[float, ...]
    method: str
    bound: int
    within_bound: bool
    attained: bool
    evaluations: int
    seed: int | None = None
    budget: int | None = None
    step: float | None = None
    findings: tuple[tuple[float, ...], ...] = ()


def verify_bound(n: int, budget: int = 100_000, seed: int = 0) -> MaxReport:
    """Search for cube-product values above the proven bound.

    Evaluates all candidate maximizers in exact arithmetic (their values
    must equal the bound exactly), then spends `budget` evaluations on
    uniform random points and another `budget` on coordinate-ascent
    refinement from random starts. Any value above bound + PRODUCT_TOL
    raises BoundViolationError; that cannot happen unless an evaluator
    is broken.
    """
    bound = qmax_bound(n)
    candidates = candidate_maximizers(n)
    for cand in candidates:
        val = eval_q(cand, exact=True)
        if val != bound:
            raise BoundViolationError(
                f"candidate {cand} evaluates to {val}, expected {bound}"
            )
    best_value = float(bound)
    best_point = tuple(float(c) for c in candidates[0])
    method = "vertex-enum"
    evaluations = len(candidates)
    limit = bound + PRODUCT_TOL
    rng = np.random.default_rng(seed)

    remaining = budget
    while remaining > 0:
        m = min(remaining, _BATCH)
        X = rng.uniform(-1.0, 1.0, size=(m, n))
        vals = eval_q_batch(X)
        evaluations += m
        idx = int(np.argmax(vals))
        top = float(vals[idx])
        if top > limit:
            raise BoundViolationError(
                f"random point {tuple(X[idx])} gives {top} > bound {bound}"
            )
        if top > best_value:
            best_value, best_point, method = top, tuple(X[idx]), "random"
        remaining -= m

    rounds = 20
    starts = max(1, budget // (2 * rounds * n))
    P = rng.uniform(-1.0, 1.0, size=(starts, n))
    vals = eval_q_batch(P)
    evaluations += starts
    bracket = 1.0
    for _ in range(rounds):
        for c in range(n):
            for delta in (bracket, -bracket):
                Q = P.copy()
                Q[:, c] = np.clip(Q[:, c] + delta, -1.0, 1.0)
                qvals = eval_q_batch(Q)
                evaluations += starts
                better = qvals > vals
                P[better] = Q[better]
                vals = np.where(better, qvals, vals)
        bracket *= 0.5
    idx = int(np.argmax(vals))
    top = float(vals[idx])
    if top > limit:
        raise BoundViolationError(
            f"ascent point {tuple(P[idx])} gives {top} > bound {bound}"
        )
    if top > best_value:
        best_value, best_point, method = top, tuple(P[idx]), "coordinate-ascent"

    return MaxReport(
        n=n,
        best_value=best_value,
        best_point=best_point,
        method=method,
        bound=bound,
        within_bound=True,
        attained=best_value == float(bound),
        evaluations=evaluations,
        seed=seed,
        budget=budget,
    )


def grid_max(n: int, step: float) -> MaxReport:
    """Exhaustive cube-product sweep over the uniform grid of pitch `step`.

    step must divide 1 evenly so that -1, 0 and 1 are grid points; then
    the known maximizers lie on the grid and the sweep must attain the
    bound exactly. Grid points attaining the bound outside the known
    family are returned as findings, not failures.
    """
    if n < 1:
        raise DomainError(f"dimension must be positive, got {n}")
    if step <= 0:
        raise DomainError(f"step must be positive, got {step}")
    m = round(1.0 / step)
    if m < 1 or abs(m * step - 1.0) > 1e-9:
        raise DomainError(f"step {step} does not divide 1 evenly")
    if step <= 0.1 + 1e-12 and n > 6:
        raise ResourceLimitError(f"grid with step {step} is limited to n <= 6")
    total = (2 * m + 1) ** n
    if total > _GRID_POINT_CAP:
        raise ResourceLimitError(
            f"grid would have {total} points, cap is {_GRID_POINT_CAP}"
        )
    g = np.array([k / m for k in range(-m, m + 1)])
    bound = qmax_bound(n)
    limit = bound + PRODUCT_TOL
    near = bound - 1e-12
    if n == 1:
        tail = np.empty((1, 0))
    else:
        mesh = np.meshgrid(*([g] * (n - 1)), indexing="ij")
        tail = np.stack(mesh, axis=-1).reshape(-1, n - 1)
    best_value = -math.inf
    best_point: tuple[float, ...] = ()
    attainers: list[tuple[float, ...]] = []
    evaluations = 0
    for v in g:
        X = np.concatenate([np.full((tail.shape[0], 1), v), tail], axis=1)
        vals = eval_q_batch(X)
        evaluations += X.shape[0]
        idx = int(np.argmax(vals))
        top = float(vals[idx])
        if top > limit:
            raise BoundViolationError(
                f"grid point {tuple(X[idx])} gives {top} > bound {bound}"
            )
        if top > best_value:
            best_value, best_point = top, tuple(float(c) for c in X[idx])
        for row in np.nonzero(vals >= near)[0]:
            attainers.append(tuple(float(c) for c in X[row]))
    known = {tuple(float(c) for c in p) for p in candidate_maximizers(n)}
    findings = tuple(p for p in attainers if p not in known)
    return MaxReport(
        n=n,
        best_value=best_value,
        best_point=best_point,
        method="grid",
        bound=bound,
        within_bound=True,
        attained=best_value == float(bound),
        evaluations=evaluations,
        step=step,
        findings=findings,
    )


@dataclass(frozen=True)
class IdentityReport:
    """Exhaustive check of the three sign-counting identities.

    For every generated scheme: the four corners of any sub-square
    multiply to +1; at every '-' entry the row sum equals minus the
    column sum; and at '-' entries with i + j odd the sums satisfy
    V = 2*Vw - 1, H = 2*Hw - 1 and Hw + Vw = 1, where Hw and Vw count
    wrong entries signed by the sign they carry.
    """

    n_max: int
    vectors_checked: int
    squares_checked: int
    sums_checked: int
    parity_checked: int
    exhaustive: bool
    seed: int
    violations: tuple[str, ...]


def verify_identities(n_max: int, seed: int = 0) -> IdentityReport:
    """Check the counting identities over all schemes up to n_max.

    Exhaustive over all 2^n sign vectors for n <= 16; beyond that each
    dimension gets 512 random vectors instead.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be positive, got {n_max}")
    rng = np.random.default_rng(seed)
    exhaustive = n_max <= 16
    vectors = squares = sums = parity = 0
    violations: list[str] = []
    for n in range(1, n_max + 1):
        if n <= 16:
            pool = all_sign_vectors(n)
        else:
            pool = (
                tuple(int(v) for v in rng.choice((PLUS, MINUS), size=n))
                for _ in range(512)
            )
        for eps in pool:
            scheme = generate_scheme(eps)
            vectors += 1
            for i, i2, j, j2 in itertools.combinations(range(1, n + 1), 4):
                squares += 1
                if square_sign_product(scheme, i, i2, j, j2) != PLUS:
                    violations.append(
                        f"square product != +1 at ({i},{i2};{j},{j2}) for {eps}"
                    )
            for i, j in scheme.positions():
                if scheme.sign(i, j) != MINUS:
                    continue
                h = horizontal_sum(scheme, i, j)
                v = vertical_sum(scheme, i, j)
                sums += 1
                if h != -v:
                    violations.append(
                        f"row sum {h} != -(column sum {v}) at ({i},{j}) for {eps}"
                    )
                if (i + j) % 2 == 1:
                    parity += 1
                    w = wrong_counts(scheme, i, j)
                    hw = w.h_plus - w.h_minus
                    vw = w.v_plus - w.v_minus
                    if v != 2 * vw - 1 or h != 2 * hw - 1 or hw + vw != 1:
                        violations.append(
                            f"parity identity fails at ({i},{j}) for {eps}: "
                            f"H={h}, V={v}, Hw={hw}, Vw={vw}"
                        )
    return IdentityReport(
        n_max=n_max,
        vectors_checked=vectors,
        squares_checked=squares,
        sums_checked=sums,
        parity_checked=parity,
        exhaustive=exhaustive,
        seed=seed,
        violations=tuple(sorted(violations)),
    )


@dataclass(frozen=True)
class InequalityReport:
    """Sampled check of the four factor inequalities on [0,1]^3."""

    samples: int
    seed: int
    checked: int
    corner_checks: int
    max_residual: float
    violations: tuple[str, ...]


def verify_inequalities(samples: int = 100_000, seed: int = 0) -> InequalityReport:
    """Sample the four factor inequalities at random points plus corners.

    Random points are checked vectorized; the 8 corners of the cube go
    through the scalar evaluator with exact integer arithmetic. Also
    tracks the largest deviation of the quad_swap gap from its closed
    factored form, which must stay at roundoff level.
    """
    if samples < 0:
        raise DomainError(f"samples must be nonnegative, got {samples}")
    rng = np.random.default_rng(seed)
    pts = rng.uniform(0.0, 1.0, size=(samples, 3))
    x, y, z = pts[:, 0], pts[:, 1], pts[:, 2]
    pair_lhs = (1 - x) * (1 + x * y)
    quad_lhs = (1 - y) * (1 + x * y) * (1 + y * z) * (1 - x * y * z)
    quad_rhs = (1 + y) * (1 - x * y) * (1 - y * z) * (1 + x * y * z)
    sides = {
        "pair_one": (pair_lhs, np.ones_like(x)),
        "pair_swap": (pair_lhs, (1 + x) * (1 - x * y)),
        "quad_swap": (quad_lhs, quad_rhs),
        "quad_one": (quad_lhs, np.ones_like(x)),
    }
    violations: list[str] = []
    checked = 0
    for which, (lhs, rhs) in sides.items():
        checked += samples
        bad = np.nonzero(lhs > rhs + FACTOR_TOL)[0]
        for idx in bad[:10]:
            violations.append(
                f"{which} fails at {tuple(pts[idx])}: "
                f"{float(lhs[idx])} > {float(rhs[idx])}"
            )
    residual = (quad_rhs - quad_lhs) - 2 * y * (1 - x) * (1 - z) * (1 + x * y * y * z)
    max_residual = float(np.max(np.abs(residual))) if samples else 0.0
    if max_residual > FACTOR_TOL:
        violations.append(f"quad_swap gap factorization off by {max_residual}")
    corner_checks = 0
    for cx, cy, cz in itertools.product((0, 1), repeat=3):
        for which in sides:
            corner_checks += 1
            res = check_factor_inequality(which, cx, cy, cz)
            if not res.holds:
                violations.append(
                    f"{which} fails at corner ({cx},{cy},{cz}): "
                    f"{res.lhs} > {res.rhs}"
                )
            if res.residual is not None and res.residual != 0:
                violations.append(
                    f"quad_swap gap factorization off at corner "
                    f"({cx},{cy},{cz}): {res.residual}"
                )
    return InequalityReport(
        samples=samples,
        seed=seed,
        checked=checked,
        corner_checks=corner_checks,
        max_residual=max_residual,
        violations=tuple(sorted(violations)),
    )


@dataclass(frozen=True)
class MonotonicityReport:
    """Sampled check that certificate moves never decrease the product."""

    n_max: int
    certificates: int
    moves_checked: int
    samples_per_move: int
    seed: int
    violations: tuple[str, ...]


def verify_monotonicity(
    n_max: int, samples_per_move: int = 100, seed: int = 0
) -> MonotonicityReport:
    """Replay every certificate up to n_max, sampling F before and after
    each move and checking the local factor-product bound.

    For each move, fresh uniform z-samples verify F_before <= F_after up
    to PRODUCT_TOL and that the product of the move's touched factors in
    the pre-move scheme stays <= 1 up to FACTOR_TOL.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be positive, got {n_max}")
    if n_max > 8:
        raise ResourceLimitError(
            f"exhaustive sweep is limited to n_max <= 8, got {n_max}"
        )
    rng = np.random.default_rng(seed)
    certificates = moves_checked = 0
    violations: list[str] = []
    for n in range(1, n_max + 1):
        for eps in all_sign_vectors(n):
            cert = build_certificate(eps)
            certificates += 1
            scheme = generate_scheme(eps)
            for move in cert.moves:
                moves_checked += 1
                Z = rng.uniform(0.0, 1.0, size=(samples_per_move, n))
                local = np.ones(samples_per_move)
                for (i, j) in move.touched_positions():
                    prods = np.prod(Z[:, i - 1 : j], axis=1)
                    local = local * (1 - scheme.sign(i, j) * prods)
                worst_local = float(np.max(local)) if samples_per_move else 0.0
                if worst_local > 1 + FACTOR_TOL:
                    violations.append(
                        f"local factor product {worst_local} > 1 "
                        f"for {move} on {eps}"
                    )
                after = apply_move(scheme, move)
                f_before = eval_f_batch(scheme, Z)
                f_after = eval_f_batch(after, Z)
                drop = np.nonzero(f_before > f_after + PRODUCT_TOL)[0]
                for idx in drop[:10]:
                    violations.append(
                        f"F decreased across {move} on {eps} at z={tuple(Z[idx])}: "
                        f"{float(f_before[idx])} > {float(f_after[idx])}"
                    )
                scheme = after
            if not is_reference(scheme):
                violations.append(f"certificate for {eps} does not reach the target")
    return MonotonicityReport(
        n_max=n_max,
        certificates=certificates,
        moves_checked=moves_checked,
        samples_per_move=samples_per_move,
        seed=seed,
        violations=tuple(sorted(violations)),
    )


def report_to_json(report) -> str:
    """JSON for any of the report dataclasses, field order preserved."""

    def convert(v):
        if isinstance(v, tuple):
            return [convert(x) for x in v]
        return v

    obj = {
        f.name: convert(getattr(report, f.name))
        for f in dataclasses.fields(report)
    }
    return json.dumps(obj, separators=(",", ":"))

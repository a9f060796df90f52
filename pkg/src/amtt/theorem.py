"""Both sides of the all-minors identity, numerically and symbolically.

The determinant side is ``det M(W, U)``; the forest side is the signed sum
of edge monomials over all forests from U to W.  The directional-derivative
helpers compare the two sides along the tangent directions
``d/dM_ij - d/dM_w0j`` of the space of semi-laplacian matrices.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Union

from .errors import ContractError, ResourceGuardError
from .forests import DEFAULT_ENUMERATION_CAP, OrientedForest, enumerate_forests
from .linalg import (
    ExactMatrix,
    VertexSubset,
    column_sums,
    det_exact,
    format_rational,
    is_semi_laplacian,
    kept_indices,
    minor,
    random_semi_laplacian,
)
from .poly import EdgePolynomial, poly_det
from .signs import epsilon, epsilon_double_prime, epsilon_prime, glue

DEFAULT_SYMBOLIC_CAP = 4

Value = Union[Fraction, EdgePolynomial]


@dataclass
class VerificationReport:
    n: int
    U: list[int]
    W: list[int]
    lhs: Value
    rhs: Value
    forest_count: int
    match: bool
    elapsed: float = 0.0

    def to_json_obj(self) -> dict:
        def encode(v: Value):
            if isinstance(v, EdgePolynomial):
                return v.to_json_obj()
            return format_rational(v)

        return {
            "n": self.n,
            "U": list(self.U),
            "W": list(self.W),
            "forest_count": self.forest_count,
            "lhs": encode(self.lhs),
            "rhs": encode(self.rhs),
            "match": self.match,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "VerificationReport":
        def decode(v):
            if isinstance(v, list):
                return EdgePolynomial.from_json_obj(obj["n"], v)
            return Fraction(v)

        return cls(
            n=obj["n"],
            U=list(obj["U"]),
            W=list(obj["W"]),
            lhs=decode(obj["lhs"]),
            rhs=decode(obj["rhs"]),
            forest_count=obj["forest_count"],
            match=obj["match"],
            elapsed=obj["elapsed_ms"] / 1000,
        )


def _require_semi_laplacian(M: ExactMatrix) -> None:
    if not is_semi_laplacian(M):
        bad = [c for c, s in enumerate(column_sums(M), 1) if s != 0]
        raise ContractError(
            f"matrix is not semi-laplacian: column {bad[0]} sums to {column_sums(M)[bad[0] - 1]}"
        )


def forest_monomial(F: OrientedForest, M) -> Value:
    """Product of ``M[i, j]`` over the edges (i, j) of F; empty product is 1.

    ``M`` may be an :class:`ExactMatrix` or a square list of polynomials.
    """
    if isinstance(M, ExactMatrix):
        if M.rows != F.n or M.cols != F.n:
            raise ContractError(f"forest on {F.n} vertices, matrix {M.rows}x{M.cols}")
        acc = Fraction(1)
        for i, j in F.edges:
            acc *= M.entries[i - 1][j - 1]
        return acc
    if len(M) != F.n:
        raise ContractError(f"forest on {F.n} vertices, matrix of size {len(M)}")
    acc = EdgePolynomial.one(F.n)
    for i, j in sorted(F.edges):
        acc = acc * M[i - 1][j - 1]
    return acc


@lru_cache(maxsize=None)
def signed_forests(n: int, U: VertexSubset, W: VertexSubset) -> tuple[tuple[int, OrientedForest], ...]:
    """Every forest from U to W paired with its sign."""
    return tuple((epsilon(U, W, F), F) for F in enumerate_forests(n, U, W, cap=max(n, DEFAULT_ENUMERATION_CAP)))


def forest_sum(M: ExactMatrix, U: VertexSubset, W: VertexSubset, cap: int = DEFAULT_ENUMERATION_CAP) -> Fraction:
    """Signed sum of forest monomials over all forests from U to W."""
    _require_semi_laplacian(M)
    n = M.rows
    if n > cap:
        raise ResourceGuardError(f"n = {n} exceeds the enumeration cap {cap}")
    grid = M.entries
    total = Fraction(0)
    for sign, F in signed_forests(n, U, W):
        term = Fraction(sign)
        for v, p in enumerate(F.parent):
            if p is not None:
                term *= grid[p - 1][v]
                if not term:
                    break
        total += term
    return total


def verify_identity(M: ExactMatrix, U: VertexSubset, W: VertexSubset, cap: int = DEFAULT_ENUMERATION_CAP) -> VerificationReport:
    start = time.perf_counter()
    _require_semi_laplacian(M)
    lhs = det_exact(minor(M, W, U))
    rhs = forest_sum(M, U, W, cap=cap)
    count = len(signed_forests(M.rows, U, W))
    return VerificationReport(
        n=M.rows, U=list(U), W=list(W), lhs=lhs, rhs=rhs,
        forest_count=count, match=lhs == rhs, elapsed=time.perf_counter() - start,
    )


def subset_pairs(n: int, k_min: int = 1) -> Iterator[tuple[VertexSubset, VertexSubset]]:
    """All (U, W) with |U| = |W| = k, k_min <= k <= n."""
    for k in range(k_min, n + 1):
        subsets = [VertexSubset(n, c) for c in combinations(range(1, n + 1), k)]
        for U in subsets:
            for W in subsets:
                yield U, W


@dataclass
class FuzzConfig:
    n_max: int = 4
    trials: int = 25
    seed: int = 0
    entry_bound: int = 9
    cap: int = DEFAULT_ENUMERATION_CAP


@dataclass
class FuzzSummary:
    config: FuzzConfig
    checks: int = 0
    failures: list[dict] = field(default_factory=list)
    per_n: dict[int, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        return {
            "config": asdict(self.config),
            "checks": self.checks,
            "checks_per_n": {str(k): v for k, v in self.per_n.items()},
            "failure_count": len(self.failures),
            "failures": self.failures,
        }


def trial_seed(seed: int, n: int, trial: int) -> str:
    return f"{seed}:{n}:{trial}"


def fuzz_campaign(config: FuzzConfig) -> FuzzSummary:
    """Check the identity on seeded random matrices for every n and (U, W)."""
    if config.n_max > config.cap:
        raise ResourceGuardError(f"n_max = {config.n_max} exceeds the enumeration cap {config.cap}")
    summary = FuzzSummary(config)
    for n in range(1, config.n_max + 1):
        pairs = list(subset_pairs(n))
        done = 0
        for trial in range(config.trials):
            M = random_semi_laplacian(n, config.entry_bound, trial_seed(config.seed, n, trial))
            for U, W in pairs:
                report = verify_identity(M, U, W, cap=config.cap)
                done += 1
                if not report.match:
                    summary.failures.append({
                        "n": n, "trial": trial, "U": list(U), "W": list(W),
                        "lhs": format_rational(report.lhs), "rhs": format_rational(report.rhs),
                    })
        summary.per_n[n] = done
        summary.checks += done
    return summary


# ---------------------------------------------------------------------------
# symbolic side
# ---------------------------------------------------------------------------

def _check_symbolic_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ContractError("n must be at least 1")
    if n > cap:
        raise ResourceGuardError(f"n = {n} exceeds the symbolic cap {cap}")


@lru_cache(maxsize=None)
def _generic(n: int) -> tuple[tuple[EdgePolynomial, ...], ...]:
    grid = [[EdgePolynomial.zero(n) for _ in range(n)] for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                x = EdgePolynomial.variable(n, i, j)
                grid[i - 1][j - 1] = x
                grid[j - 1][j - 1] = grid[j - 1][j - 1] - x
    return tuple(tuple(r) for r in grid)


def generic_semi_laplacian(n: int, cap: int = DEFAULT_SYMBOLIC_CAP) -> list[list[EdgePolynomial]]:
    """Off-diagonal entries x_ij; each diagonal entry minus its column's other entries."""
    _check_symbolic_cap(n, cap)
    return [list(r) for r in _generic(n)]


def _generic_minor(n: int, W: VertexSubset, U: VertexSubset) -> list[list[EdgePolynomial]]:
    G = _generic(n)
    return [[G[r - 1][c - 1] for c in kept_indices(n, U)] for r in kept_indices(n, W)]


@lru_cache(maxsize=None)
def symbolic_minor_det(n: int, W: VertexSubset, U: VertexSubset) -> EdgePolynomial:
    return poly_det(_generic_minor(n, W, U), n)


@lru_cache(maxsize=None)
def symbolic_forest_sum(n: int, U: VertexSubset, W: VertexSubset) -> EdgePolynomial:
    G = _generic(n)
    acc = EdgePolynomial.zero(n)
    for sign, F in signed_forests(n, U, W):
        mono = forest_monomial(F, G)
        acc = acc + mono if sign > 0 else acc - mono
    return acc


def symbolic_verify(n: int, U: VertexSubset, W: VertexSubset, cap: int = DEFAULT_SYMBOLIC_CAP) -> VerificationReport:
    """Compare both sides as polynomials at the generic semi-laplacian matrix."""
    _check_symbolic_cap(n, cap)
    start = time.perf_counter()
    lhs = symbolic_minor_det(n, W, U)
    rhs = symbolic_forest_sum(n, U, W)
    return VerificationReport(
        n=n, U=list(U), W=list(W), lhs=lhs, rhs=rhs,
        forest_count=len(signed_forests(n, U, W)), match=lhs == rhs,
        elapsed=time.perf_counter() - start,
    )


def directional_derivative(p: EdgePolynomial, i: int, j: int, w0: int) -> EdgePolynomial:
    """Apply d/dx_ij - d/dx_w0j in the free off-diagonal variables."""
    return p.derivative(i, j) - p.derivative(w0, j)


def _check_direction(n: int, U: VertexSubset, W: VertexSubset, i: int, j: int, w0: int) -> None:
    _check_symbolic_cap(n, DEFAULT_SYMBOLIC_CAP)
    if U.n != n or W.n != n:
        raise ContractError("subsets do not live in 1..n")
    if len(U) != len(W) or len(U) < 1:
        raise ContractError("need |U| = |W| >= 1")
    if w0 not in W:
        raise ContractError(f"w0 = {w0} must lie in W = {W}")
    for v in (i, j):
        if not 1 <= v <= n:
            raise ContractError(f"vertex {v} outside 1..{n}")


def partial_forest_sum(direction: tuple[int, int, int], U: VertexSubset, W: VertexSubset, n: int) -> EdgePolynomial:
    """Directional derivative of the symbolic forest sum."""
    i, j, w0 = direction
    _check_direction(n, U, W, i, j, w0)
    return directional_derivative(symbolic_forest_sum(n, U, W), i, j, w0)


def glued_forest_sum(direction: tuple[int, int, int], U: VertexSubset, W: VertexSubset, n: int) -> EdgePolynomial:
    """Sum over forests F from U+j to W+i of eps''(F) * eps(U, W, glue(F)) * A_F."""
    i, j, w0 = direction
    _check_direction(n, U, W, i, j, w0)
    if i in W or j in U:
        raise ContractError("glued sum needs i not in W and j not in U")
    Uj, Wi = U.with_vertex(j), W.with_vertex(i)
    G = _generic(n)
    acc = EdgePolynomial.zero(n)
    for F in enumerate_forests(n, Uj, Wi):
        sign = epsilon_double_prime(F, i, j) * epsilon(U, W, glue(F, U, W, i, j, w0))
        mono = forest_monomial(F, G)
        acc = acc + mono if sign > 0 else acc - mono
    return acc


def minor_derivative(direction: tuple[int, int, int], U: VertexSubset, W: VertexSubset, n: int) -> EdgePolynomial:
    """Directional derivative of det M(W, U) for any direction (possibly zero)."""
    i, j, w0 = direction
    _check_direction(n, U, W, i, j, w0)
    return directional_derivative(symbolic_minor_det(n, W, U), i, j, w0)


def partial_minor_det(direction: tuple[int, int, int], U: VertexSubset, W: VertexSubset, n: int) -> EdgePolynomial:
    """Directional derivative of det M(W, U), for i not in W and j not in U."""
    i, j, _ = direction
    if i in W or j in U:
        raise ContractError("partial_minor_det needs i not in W and j not in U")
    return minor_derivative(direction, U, W, n)


def minor_derivative_expansion(direction: tuple[int, int, int], U: VertexSubset, W: VertexSubset, n: int) -> EdgePolynomial:
    """eps'_ij(U, W) * det M(W+i, U+j) at the generic matrix."""
    i, j, w0 = direction
    _check_direction(n, U, W, i, j, w0)
    sign = epsilon_prime(i, j, U, W)
    return sign * symbolic_minor_det(n, W.with_vertex(i), U.with_vertex(j))


def complete_graph_laplacian(n: int) -> ExactMatrix:
    """All off-diagonal entries 1, diagonal -(n - 1)."""
    return ExactMatrix.from_rows([[1 if i != j else -(n - 1) for j in range(n)] for i in range(n)], cols=n)


def graph_semi_laplacian(n: int, edges: list[tuple[int, int, Fraction]]) -> ExactMatrix:
    """Weighted digraph -> semi-laplacian: M[u, v] += w per edge, diagonals balance columns."""
    grid = [[Fraction(0)] * n for _ in range(n)]
    for u, v, w in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ContractError(f"edge ({u},{v}) outside 1..{n}")
        if u == v:
            raise ContractError(f"self-loop at {u}")
        grid[u - 1][v - 1] += w
    for j in range(n):
        grid[j][j] = -sum(grid[i][j] for i in range(n) if i != j)
    return ExactMatrix.from_rows(grid, cols=n)

"""Sparse integer polynomials in the edge variables x_ij (i != j).

Exponent vectors are dense tuples of length n(n-1), indexed by the ordered
pairs (i, j) in lexicographic order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

from .errors import ContractError, VertexIndexError

Scalar = Union[int, "EdgePolynomial"]


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j)


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(edge_pairs(n))}


def variable_index(n: int, i: int, j: int) -> int:
    try:
        return _pair_index(n)[(i, j)]
    except KeyError:
        raise VertexIndexError(f"no edge variable x_{i}_{j} for n = {n}") from None


def variable_name(i: int, j: int) -> str:
    return f"x_{i}_{j}"


class EdgePolynomial:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[tuple[int, ...], int] | None = None):
        self.n = n
        width = n * (n - 1)
        clean = {}
        for exps, c in (terms or {}).items():
            if len(exps) != width:
                raise ContractError(f"exponent vector of length {len(exps)}, expected {width}")
            if c:
                clean[tuple(exps)] = int(c)
        self.terms = clean

    @classmethod
    def constant(cls, n: int, c: int) -> "EdgePolynomial":
        return cls(n, {(0,) * (n * (n - 1)): c})

    @classmethod
    def zero(cls, n: int) -> "EdgePolynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "EdgePolynomial":
        return cls.constant(n, 1)

    @classmethod
    def variable(cls, n: int, i: int, j: int) -> "EdgePolynomial":
        exps = [0] * (n * (n - 1))
        exps[variable_index(n, i, j)] = 1
        return cls(n, {tuple(exps): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def _lift(self, other: Scalar) -> "EdgePolynomial":
        if isinstance(other, EdgePolynomial):
            if other.n != self.n:
                raise ContractError(f"mixing polynomials for n = {self.n} and n = {other.n}")
            return other
        if isinstance(other, int):
            return EdgePolynomial.constant(self.n, other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = EdgePolynomial.constant(self.n, other)
        if not isinstance(other, EdgePolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __neg__(self) -> "EdgePolynomial":
        return EdgePolynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: Scalar) -> "EdgePolynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return EdgePolynomial(self.n, out)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "EdgePolynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "EdgePolynomial":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "EdgePolynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return EdgePolynomial(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "EdgePolynomial":
        if k < 0:
            raise ValueError("negative power")
        out = EdgePolynomial.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self, i: int, j: int) -> "EdgePolynomial":
        """Partial derivative in x_ij; zero for the diagonal i == j (not a variable)."""
        if i == j:
            if not 1 <= i <= self.n:
                raise VertexIndexError(f"vertex {i} outside 1..{self.n}")
            return EdgePolynomial.zero(self.n)
        k = variable_index(self.n, i, j)
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                d = list(e)
                d[k] -= 1
                out[tuple(d)] = c * e[k]
        return EdgePolynomial(self.n, out)

    def evaluate(self, values: dict[tuple[int, int], Fraction]) -> Fraction:
        """Substitute x_ij -> values[(i, j)]."""
        pairs = edge_pairs(self.n)
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for k, power in enumerate(e):
                if power:
                    term *= Fraction(values[pairs[k]]) ** power
            total += term
        return total

    def evaluate_matrix(self, M) -> Fraction:
        """Substitute the off-diagonal entries of an ExactMatrix."""
        return self.evaluate({(i, j): M[i, j] for (i, j) in edge_pairs(self.n)})

    def monomials(self) -> Iterator[tuple[int, dict[str, int]]]:
        pairs = edge_pairs(self.n)
        for e in sorted(self.terms, reverse=True):
            named = {variable_name(*pairs[k]): p for k, p in enumerate(e) if p}
            yield self.terms[e], named

    def to_json_obj(self) -> list[dict]:
        return [{"coeff": c, "exponents": named} for c, named in self.monomials()]

    @classmethod
    def from_json_obj(cls, n: int, obj: list[dict]) -> "EdgePolynomial":
        width = n * (n - 1)
        out: dict[tuple[int, ...], int] = {}
        for term in obj:
            exps = [0] * width
            for name, p in term["exponents"].items():
                _, i, j = name.split("_")
                exps[variable_index(n, int(i), int(j))] = int(p)
            key = tuple(exps)
            out[key] = out.get(key, 0) + int(term["coeff"])
        return cls(n, out)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, named in self.monomials():
            mono = "*".join(v if p == 1 else f"{v}^{p}" for v, p in named.items())
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_det(rows: list[list[EdgePolynomial]], n: int) -> EdgePolynomial:
    """Determinant by Laplace expansion along the first row; 0x0 gives 1."""
    size = len(rows)
    cache: dict[tuple[int, tuple[int, ...]], EdgePolynomial] = {}

    def expand(r: int, cols: tuple[int, ...]) -> EdgePolynomial:
        if r == size:
            return EdgePolynomial.one(n)
        key = (r, cols)
        if key in cache:
            return cache[key]
        acc = EdgePolynomial.zero(n)
        for pos, c in enumerate(cols):
            entry = rows[r][c]
            if entry.is_zero():
                continue
            sub = expand(r + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            acc = acc - term if pos % 2 else acc + term
        cache[key] = acc
        return acc

    return expand(0, tuple(range(size)))

"""Oriented forests from U to W: representation, validation, enumeration.

A forest is stored as a parent map: ``parent[v] = u`` records the oriented
edge ``(u, v)``.  In a forest from U to W the roots are exactly U, so the
orientation "away from the U-vertex" is built into the representation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Optional

from .errors import ContractError, ResourceGuardError, VertexIndexError
from .linalg import VertexSubset

DEFAULT_ENUMERATION_CAP = 8


@dataclass(frozen=True, order=True)
class OrientedForest:
    """Functional parent map on {1..n}; not necessarily acyclic.

    ``parent[v - 1]`` is the parent of vertex ``v`` or ``None``.  The type
    can hold cyclic graphs (``reattach`` may produce one); use
    :func:`is_valid_forest` to check the forest conditions.
    """

    n: int
    parent: tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        if len(self.parent) != self.n:
            raise ContractError(f"parent map has {len(self.parent)} slots, expected {self.n}")
        for p in self.parent:
            if p is not None and not 1 <= p <= self.n:
                raise VertexIndexError(f"parent {p} outside 1..{self.n}")

    @classmethod
    def empty(cls, n: int) -> "OrientedForest":
        return cls(n, (None,) * n)

    @classmethod
    def from_parent_map(cls, n: int, parents: Mapping[int, int]) -> "OrientedForest":
        slots: list[Optional[int]] = [None] * n
        for child, par in parents.items():
            _check_vertex(n, child)
            slots[child - 1] = par
        return cls(n, tuple(slots))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "OrientedForest":
        parents: dict[int, int] = {}
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if v in parents:
                raise ContractError(f"vertex {v} has two incoming edges")
            parents[v] = u
        return cls.from_parent_map(n, parents)

    def parent_of(self, v: int) -> Optional[int]:
        _check_vertex(self.n, v)
        return self.parent[v - 1]

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((p, v) for v, p in enumerate(self.parent, 1) if p is not None)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def roots(self) -> tuple[int, ...]:
        return tuple(v for v, p in enumerate(self.parent, 1) if p is None)

    def with_parent(self, v: int, par: Optional[int]) -> "OrientedForest":
        _check_vertex(self.n, v)
        slots = list(self.parent)
        slots[v - 1] = par
        return OrientedForest(self.n, tuple(slots))

    def canonical_key(self) -> tuple[int, ...]:
        """Lexicographic ordering key; a missing parent sorts first."""
        return tuple(0 if p is None else p for p in self.parent)

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "OrientedForest":
        try:
            n, edges = obj["n"], obj["edges"]
        except (KeyError, TypeError) as exc:
            raise ValueError("forest JSON needs fields 'n' and 'edges'") from exc
        return cls.from_edges(n, [(int(u), int(v)) for u, v in edges])

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def __str__(self) -> str:
        return "{" + ", ".join(f"({u},{v})" for u, v in self.sorted_edges()) + "}"


def _check_vertex(n: int, v: int) -> None:
    if not 1 <= v <= n:
        raise VertexIndexError(f"vertex {v} outside 1..{n}")


def _check_same_size(U: VertexSubset, W: VertexSubset) -> None:
    if len(U) != len(W):
        raise ContractError(f"|U| = {len(U)} differs from |W| = {len(W)}")
    if U.n != W.n:
        raise ContractError(f"U lives in 1..{U.n} but W in 1..{W.n}")


def root_of(F: OrientedForest, v: int) -> Optional[int]:
    """Follow parents from ``v``; ``None`` if a cycle is hit."""
    seen = 0
    while True:
        p = F.parent[v - 1]
        if p is None:
            return v
        v = p
        seen += 1
        if seen > F.n:
            return None


def is_acyclic(F: OrientedForest) -> bool:
    return all(root_of(F, v) is not None for v in range(1, F.n + 1))


def is_valid_forest(F: OrientedForest, U: VertexSubset, W: VertexSubset) -> bool:
    """Check that ``F`` is a forest from U to W.

    The roots must be exactly U, the parent map acyclic, and every tree
    must hold exactly one vertex of W.  Each tree then holds exactly one
    U-vertex automatically, its root.
    """
    _check_same_size(U, W)
    if F.n != U.n:
        raise ContractError(f"forest on 1..{F.n} but subsets on 1..{U.n}")
    if set(F.roots()) != set(U.members):
        return False
    hits: dict[int, int] = {}
    for v in range(1, F.n + 1):
        r = root_of(F, v)
        if r is None:
            return False
        if v in W:
            hits[r] = hits.get(r, 0) + 1
    return all(hits.get(u, 0) == 1 for u in U)


@lru_cache(maxsize=None)
def _rooted_forests(n: int, roots: tuple[int, ...]) -> tuple[OrientedForest, ...]:
    # every acyclic parent function on the non-roots, in lexicographic order
    free = [v for v in range(1, n + 1) if v not in roots]
    choices = [[p for p in range(1, n + 1) if p != v] for v in free]
    out = []
    slots: list[Optional[int]] = [None] * n
    for assignment in product(*choices):
        for v, p in zip(free, assignment):
            slots[v - 1] = p
        F = OrientedForest(n, tuple(slots))
        if is_acyclic(F):
            out.append(F)
    return tuple(out)


@lru_cache(maxsize=None)
def _forests_between(n: int, U: tuple[int, ...], W: tuple[int, ...]) -> tuple[OrientedForest, ...]:
    Wset = set(W)
    out = []
    for F in _rooted_forests(n, U):
        hits: dict[int, int] = {}
        for w in Wset:
            r = root_of(F, w)
            hits[r] = hits.get(r, 0) + 1
        if all(hits.get(u, 0) == 1 for u in U):
            out.append(F)
    return tuple(out)


def enumerate_forests(
    n: int, U: VertexSubset, W: VertexSubset, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[OrientedForest]:
    """All forests from U to W on {1..n}, sorted by parent map.

    Brute force over parent functions on V \\ U, so the cost grows like
    (n-1)^(n-k); ``cap`` bounds n.
    """
    _check_same_size(U, W)
    if U.n != n:
        raise ContractError(f"subsets live in 1..{U.n}, not 1..{n}")
    if len(U) < 1:
        raise ContractError("forests need |U| = |W| >= 1")
    if n > cap:
        raise ResourceGuardError(f"n = {n} exceeds the enumeration cap {cap}")
    return list(_forests_between(n, U.members, W.members))


def tree_partition(F: OrientedForest) -> dict[int, list[int]]:
    """Map each root to the sorted vertices of its tree."""
    trees: dict[int, list[int]] = {}
    for v in range(1, F.n + 1):
        r = root_of(F, v)
        if r is None:
            raise ContractError("parent map contains a cycle")
        trees.setdefault(r, []).append(v)
    return trees


def induced_bijection(F: OrientedForest, U: VertexSubset, W: VertexSubset) -> dict[int, int]:
    """Send each u in U to the W-vertex sharing its tree."""
    if not is_valid_forest(F, U, W):
        raise ContractError(f"{F} is not a forest from {U} to {W}")
    return {root_of(F, w): w for w in W}


def has_oriented_path(F: OrientedForest, a: int, b: int) -> bool:
    """Whether ``b`` is reachable from ``a`` along edge orientation.

    ``a == b`` counts as a path of length zero.
    """
    _check_vertex(F.n, a)
    _check_vertex(F.n, b)
    v: Optional[int] = b
    for _ in range(F.n + 1):
        if v == a:
            return True
        v = F.parent[v - 1]
        if v is None:
            return False
    return False


def is_descendant(F: OrientedForest, i: int, j: int) -> bool:
    """Strict descendant: ``i != j`` and a path runs from ``j`` to ``i``."""
    return i != j and has_oriented_path(F, j, i)


def has_path_to_set(F: OrientedForest, a: int, targets: Iterable[int]) -> bool:
    return any(has_oriented_path(F, a, t) for t in targets)

"""Signs attached to forests, and the forest surgeries used in the proof.

Signs are plain ints in {+1, -1}.
"""

from __future__ import annotations

from typing import Mapping

from .errors import ContractError, InvariantError, VertexIndexError
from .forests import (
    OrientedForest,
    enumerate_forests,
    has_oriented_path,
    has_path_to_set,
    induced_bijection,
    is_descendant,
    is_valid_forest,
    root_of,
)
from .linalg import VertexSubset

Sign = int


def parity_sign(exponent: int) -> Sign:
    return -1 if exponent % 2 else 1


def inversion_count(seq: list[int]) -> int:
    return sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])


def sgn_bijection(U: VertexSubset, pi: Mapping[int, int]) -> Sign:
    """Sign of the permutation sorting ``(pi(u1), ..., pi(uk))`` for u1 < ... < uk."""
    if set(pi) != set(U.members):
        raise ContractError(f"bijection domain {sorted(pi)} is not {U}")
    images = [pi[u] for u in U]
    if len(set(images)) != len(images):
        raise ContractError("map is not injective")
    return parity_sign(inversion_count(images))


def epsilon(U: VertexSubset, W: VertexSubset, F: OrientedForest) -> Sign:
    """(-1)^(n + |U|) * (-1)^(sum U + sum W) * sgn(pi_F)."""
    pi = induced_bijection(F, U, W)
    exponent = F.n + len(U) + sum(U) + sum(W)
    return parity_sign(exponent) * sgn_bijection(U, pi)


def epsilon_prime(i: int, j: int, U: VertexSubset, W: VertexSubset) -> Sign:
    """Sign picked up by the minor when row i and column j are also deleted."""
    if i in W:
        raise ContractError(f"i = {i} must not lie in W = {W}")
    if j in U:
        raise ContractError(f"j = {j} must not lie in U = {U}")
    return parity_sign(i + W.count_below(i) + j + U.count_below(j))


def epsilon_prime_subtractive(i: int, j: int, U: VertexSubset, W: VertexSubset) -> Sign:
    """Same sign written with differences in the exponent; equal parity."""
    if i in W or j in U:
        raise ContractError("need i not in W and j not in U")
    return parity_sign((i - W.count_below(i)) + (j - U.count_below(j)))


def glue_attaches_to_w0(F: OrientedForest, i: int, j: int) -> bool:
    """Whether the path from root ``j`` to its terminal vertex hits ``i``.

    Includes ``i == j``: the length-zero path from j already sits at i.
    """
    return has_oriented_path(F, j, i)


def epsilon_double_prime(F: OrientedForest, i: int, j: int) -> Sign:
    """-1 when the gluing of j closes through w0, else +1.

    That is -1 iff i is a descendant of j, where j counts as lying on its
    own path (i == j gives -1).  Only with this reading does the gluing
    sign identity hold for the diagonal direction i == j.
    """
    for v in (i, j):
        if not 1 <= v <= F.n:
            raise VertexIndexError(f"vertex {v} outside 1..{F.n}")
    return -1 if (i == j or is_descendant(F, i, j)) else 1


def _check_glue_args(F: OrientedForest, U: VertexSubset, W: VertexSubset, i: int, j: int, w0: int) -> None:
    if w0 not in W:
        raise ContractError(f"w0 = {w0} must lie in W = {W}")
    if i in W:
        raise ContractError(f"i = {i} must not lie in W = {W}")
    if j in U:
        raise ContractError(f"j = {j} must not lie in U = {U}")
    if not is_valid_forest(F, U.with_vertex(j), W.with_vertex(i)):
        raise ContractError(f"{F} is not a forest from U+{{{j}}} to W+{{{i}}}")


def glue(F: OrientedForest, U: VertexSubset, W: VertexSubset, i: int, j: int, w0: int) -> OrientedForest:
    """Turn a forest from U+j to W+i into one from U to W by adding j's in-edge.

    Adds ``(w0, j)`` if j's path to its terminal vertex hits i, otherwise
    ``(i, j)``.
    """
    _check_glue_args(F, U, W, i, j, w0)
    new_parent = w0 if glue_attaches_to_w0(F, i, j) else i
    G = F.with_parent(j, new_parent)
    if not is_valid_forest(G, U, W):
        raise InvariantError(f"gluing {F} at j={j} gave invalid {G}")
    return G


def unglue(G: OrientedForest, j: int) -> OrientedForest:
    """Drop the incoming edge of ``j``."""
    if G.parent_of(j) is None:
        raise ContractError(f"vertex {j} has no incoming edge")
    return G.with_parent(j, None)


def reattach(F: OrientedForest, i: int, j: int, w0: int) -> OrientedForest:
    """Replace the edge (i, j) by (w0, j).  The result may not be a forest."""
    if F.parent_of(j) != i:
        raise ContractError(f"edge ({i},{j}) is not in {F}")
    if not 1 <= w0 <= F.n:
        raise VertexIndexError(f"vertex {w0} outside 1..{F.n}")
    return F.with_parent(j, w0)


def first_cancellation_subset(U: VertexSubset, W: VertexSubset, i: int, j: int) -> list[OrientedForest]:
    """Forests containing (i, j) with no path from j into W."""
    return [
        F for F in enumerate_forests(U.n, U, W)
        if F.parent[j - 1] == i and not has_path_to_set(F, j, W)
    ]


def second_cancellation_subset(U: VertexSubset, W: VertexSubset, i: int, j: int, w0: int) -> list[OrientedForest]:
    """Forests containing (w0, j) with no path from j to i."""
    return [
        F for F in enumerate_forests(U.n, U, W)
        if F.parent[j - 1] == w0 and not has_oriented_path(F, j, i)
    ]


def cancellation_pairs(
    U: VertexSubset, W: VertexSubset, i: int, j: int, w0: int
) -> list[tuple[OrientedForest, OrientedForest]]:
    """Pair each forest of the first subset with its reattachment.

    The partners are checked to be distinct forests from U to W lying in
    the second subset.
    """
    n = U.n
    for v in (i, j, w0):
        if not 1 <= v <= n:
            raise VertexIndexError(f"vertex {v} outside 1..{n}")
    if w0 not in W:
        raise ContractError(f"w0 = {w0} must lie in W = {W}")
    if i in W:
        raise ContractError(f"i = {i} must not lie in W = {W}")
    if j in U:
        raise ContractError(f"j = {j} must not lie in U = {U}")
    pairs = []
    images = set()
    for F in first_cancellation_subset(U, W, i, j):
        G = reattach(F, i, j, w0)
        if not is_valid_forest(G, U, W) or has_oriented_path(G, j, i) or G in images:
            raise InvariantError(f"reattaching {F} gave {G} outside the partner set")
        images.add(G)
        pairs.append((F, G))
    return pairs


def sign_difference(F: OrientedForest, U: VertexSubset, W: VertexSubset, i: int, j: int, w0: int) -> Sign:
    """sgn(pi_F) * sgn(pi_G) for G the gluing of F (a forest from U+j to W+i)."""
    Uj, Wi = U.with_vertex(j), W.with_vertex(i)
    G = glue(F, U, W, i, j, w0)
    return sgn_bijection(Uj, induced_bijection(F, Uj, Wi)) * sgn_bijection(U, induced_bijection(G, U, W))


def predicted_sign_difference(F: OrientedForest, U: VertexSubset, W: VertexSubset, i: int, j: int) -> Sign:
    """Closed form of :func:`sign_difference` from the counts below j and i."""
    exponent = U.count_below(j) + W.count_below(i)
    if not glue_attaches_to_w0(F, i, j):
        exponent -= 1
    return parity_sign(exponent)


__all__ = [
    "Sign",
    "cancellation_pairs",
    "epsilon",
    "epsilon_double_prime",
    "epsilon_prime",
    "epsilon_prime_subtractive",
    "first_cancellation_subset",
    "glue",
    "glue_attaches_to_w0",
    "inversion_count",
    "parity_sign",
    "predicted_sign_difference",
    "reattach",
    "root_of",
    "second_cancellation_subset",
    "sgn_bijection",
    "sign_difference",
    "unglue",
]

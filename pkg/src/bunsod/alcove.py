"""Affine Weyl alcove classification of weights at a fixed level.

A weight lambda at level c is located through its shifted form lambda + rho
at the shifted level kappa = c + h^vee. It is singular when that point lies
on an affine wall; otherwise the unique affine Weyl element carrying it into
the fundamental alcove has a length and a reduced (integrable) image.

Three routes are provided. ``classify_sl2`` is the closed form,
``classify_typeA`` the residue algorithm in epsilon coordinates and
``classify_bfs`` a breadth-first search over reflection words that serves
as the oracle for the other two.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence, Union

from .liecore import GroupType, cartan_matrix, dual_coxeter, highest_root

__all__ = [
    "AlcoveClass",
    "SearchBoundExceeded",
    "BFS_RADIUS_ENV",
    "default_bfs_radius",
    "classify_sl2",
    "classify_bfs",
    "classify_typeA",
    "replay_word",
]

BFS_RADIUS_ENV = "BUNSOD_BFS_RADIUS"
_DEFAULT_RADIUS = 64

Weight = Union[int, tuple]


class SearchBoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class AlcoveClass:
    """Singular, or regular with a length and a reduced dominant weight.

    ``reduced`` is an int for the SL2 closed form and a tuple of Dynkin
    labels for the type A routes. ``word`` records the reflections found by
    the search route (0 is the affine reflection) and is ignored by ``==``.
    """

    regular: bool
    length: int | None = None
    reduced: Weight | None = None
    word: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @classmethod
    def singular(cls) -> "AlcoveClass":
        return cls(False)

    def as_labels(self) -> "AlcoveClass":
        """Same class with ``reduced`` written as a tuple of Dynkin labels."""
        if not self.regular or isinstance(self.reduced, tuple):
            return self
        return AlcoveClass(True, self.length, (self.reduced,), self.word)

    def to_dict(self) -> dict:
        if not self.regular:
            return {"regular": False}
        red = list(self.reduced) if isinstance(self.reduced, tuple) else self.reduced
        return {"regular": True, "length": self.length, "reduced": red}


def default_bfs_radius() -> int:
    raw = os.environ.get(BFS_RADIUS_ENV)
    if not raw:
        return _DEFAULT_RADIUS
    radius = int(raw)
    if radius < 0:
        raise ValueError(f"{BFS_RADIUS_ENV} must be nonnegative, got {raw!r}")
    return radius


def classify_sl2(c: int, lam: int) -> AlcoveClass:
    if c < 0:
        raise ValueError(
            f"classification needs level c >= 0, got {c}; negative levels go through bwb.cohomology"
        )
    if lam < 0:
        raise ValueError(f"weight must be nonnegative, got {lam}")
    kappa = c + 2
    n = lam + 1
    q, r = divmod(n, kappa)
    if r == 0:
        return AlcoveClass.singular()
    reduced = r - 1 if q % 2 == 0 else kappa - r - 1
    return AlcoveClass(True, q, reduced)


def _as_labels(lam: Weight, rank: int) -> tuple[int, ...]:
    labels = (lam,) if isinstance(lam, int) else tuple(lam)
    if len(labels) != rank:
        raise ValueError(f"expected {rank} Dynkin labels, got {labels}")
    if any(x < 0 for x in labels):
        raise ValueError(f"weight {labels} is not dominant")
    return labels


def _affine_data(t: GroupType):
    a = cartan_matrix(t)
    r = t.rank
    theta = highest_root(t)
    # theta in Dynkin labels: <alpha_i^vee, theta> = sum_j theta_j A[i][j]
    theta_labels = tuple(sum(theta[j] * a[i][j] for j in range(r)) for i in range(r))
    # simply laced, so the coroot of theta has the same coefficients
    return a, theta, theta_labels


def _reflect(mu, i, kappa, a, theta, theta_labels):
    """Simple affine reflection ``s_i`` on a shifted weight in Dynkin labels."""
    r = len(mu)
    if i == 0:
        k = sum(theta[j] * mu[j] for j in range(r)) - kappa
        return tuple(mu[j] - k * theta_labels[j] for j in range(r))
    i -= 1
    k = mu[i]
    return tuple(mu[j] - k * a[i][j] for j in range(r))


def replay_word(t: GroupType, c: int, reduced: Weight, word: Sequence[int]) -> tuple[int, ...]:
    """Undo a recorded reflection word, mapping a reduced weight back into lambda's orbit."""
    if t.series != "A":
        raise ValueError("alcove combinatorics only implemented for series A")
    a, theta, theta_labels = _affine_data(t)
    kappa = c + dual_coxeter(t)
    mu = tuple(x + 1 for x in _as_labels(reduced, t.rank))
    for i in reversed(word):
        mu = _reflect(mu, i, kappa, a, theta, theta_labels)
    return tuple(x - 1 for x in mu)


def classify_bfs(t: GroupType, c: int, lam: Weight, radius: int | None = None) -> AlcoveClass:
    """Breadth-first search over affine reflection words.

    The first orbit point found in the closed fundamental alcove decides:
    on a wall means singular (walls map to walls), in the interior means
    regular with length equal to the search depth.
    """
    if t.series != "A":
        raise ValueError("alcove combinatorics only implemented for series A")
    if c < 0:
        raise ValueError(f"classification needs level c >= 0, got {c}")
    if radius is None:
        radius = default_bfs_radius()
    r = t.rank
    labels = _as_labels(lam, r)
    a, theta, theta_labels = _affine_data(t)
    kappa = c + dual_coxeter(t)

    start = tuple(x + 1 for x in labels)
    seen = {start: ()}
    queue = deque([start])
    while queue:
        mu = queue.popleft()
        word = seen[mu]
        level = sum(theta[j] * mu[j] for j in range(r))
        if all(x >= 0 for x in mu) and level <= kappa:
            if any(x == 0 for x in mu) or level == kappa:
                return AlcoveClass(False, word=word)
            reduced = tuple(x - 1 for x in mu)
            return AlcoveClass(True, len(word), reduced, word)
        if len(word) >= radius:
            continue
        for i in range(r + 1):
            nxt = _reflect(mu, i, kappa, a, theta, theta_labels)
            if nxt not in seen:
                # reflections are applied on the left, so the path to lambda reads backwards
                seen[nxt] = word + (i,)
                queue.append(nxt)
    raise SearchBoundExceeded(
        f"no alcove representative for {labels} at level {c} within {radius} reflections"
    )


def classify_typeA(rank: int, c: int, lam: Weight) -> AlcoveClass:
    """Residue algorithm for SL_{rank+1}.

    Write lambda + rho as strictly decreasing integers x_1 > ... > x_{r+1}
    (x_{r+1} = 0). Singular iff two coordinates agree mod kappa. Otherwise
    the length counts the affine walls x_i - x_j = k*kappa crossed on the
    way to the fundamental alcove, and the reduced weight comes from the
    sorted residues rotated to keep the coordinate sum.
    """
    if rank < 1:
        raise ValueError(f"rank must be positive, got {rank}")
    if c < 0:
        raise ValueError(f"classification needs level c >= 0, got {c}")
    labels = _as_labels(lam, rank)
    kappa = c + rank + 1
    x = [0] * (rank + 1)
    for i in range(rank - 1, -1, -1):
        x[i] = x[i + 1] + labels[i] + 1

    residues = [xi % kappa for xi in x]
    if len(set(residues)) < len(residues):
        return AlcoveClass.singular()

    length = sum(
        (x[i] - x[j]) // kappa for i in range(rank + 1) for j in range(i + 1, rank + 1)
    )
    y = sorted(residues, reverse=True)
    shift, rem = divmod(sum(x) - sum(y), kappa)
    assert rem == 0
    # adding kappa to the smallest entry (or removing it from the largest)
    # moves to the neighbouring alcove point with the same shape
    for _ in range(abs(shift)):
        if shift > 0:
            y = [y[-1] + kappa] + y[:-1]
        else:
            y = y[1:] + [y[0] - kappa]
    reduced = tuple(y[i] - y[i + 1] - 1 for i in range(rank))
    return AlcoveClass(True, length, reduced)

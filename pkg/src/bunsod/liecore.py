"""Root data constants and exact SL2 character calculus.

Characters are sparse ``weight -> multiplicity`` maps over Python integers,
so multiplicities never overflow however large the tensor power gets.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from types import MappingProxyType
from typing import Iterable, Mapping

__all__ = [
    "GroupType",
    "SL2Character",
    "cartan_matrix",
    "positive_roots",
    "highest_root",
    "dual_coxeter",
    "irrep_character",
    "decompose",
    "tensor_decompose",
    "tensor_power_character",
    "tensor_power_multiplicities",
    "central_parity",
    "character_from_decomposition",
]


_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class GroupType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in "ABCDEFG" or len(self.series) != 1:
            raise ValueError(f"unknown Cartan series {self.series!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        if self.series in _EXCEPTIONAL_RANKS:
            if self.rank not in _EXCEPTIONAL_RANKS[self.series]:
                raise ValueError(
                    f"series {self.series} only exists in ranks "
                    f"{_EXCEPTIONAL_RANKS[self.series]}, got {self.rank}"
                )
        elif self.rank < _MIN_RANK[self.series]:
            # B1 = A1, C2 = B2, D3 = A3: reject so each group has one name
            raise ValueError(
                f"series {self.series} requires rank >= {_MIN_RANK[self.series]}"
            )

    @classmethod
    def parse(cls, label: str) -> "GroupType":
        """Parse labels such as ``"A1"``, ``"E8"`` or ``"G2"``."""
        label = label.strip()
        if len(label) < 2 or not label[1:].isdigit():
            raise ValueError(f"cannot parse group type {label!r}")
        return cls(label[0].upper(), int(label[1:]))

    def __str__(self):
        return f"{self.series}{self.rank}"


@lru_cache(maxsize=None)
def cartan_matrix(t: GroupType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix ``A[i][j] = <alpha_i^vee, alpha_j>`` in Bourbaki labelling."""
    r = t.rank
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    s = t.series
    if s in "ABCD":
        for i in range(r - 1):
            link(i, i + 1)
        if s == "B":
            # alpha_r short
            link(r - 2, r - 1, -1, -2)
        elif s == "C":
            # alpha_r long
            link(r - 2, r - 1, -2, -1)
        elif s == "D":
            a[r - 2][r - 1] = a[r - 1][r - 2] = 0
            link(r - 3, r - 1)
    elif s == "E":
        # Bourbaki: 1-3-4-5-6(-7-8), with 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, r - 1):
            link(i, i + 1)
    elif s == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif s == "G":
        # alpha_1 short
        link(0, 1, -3, -1)
    return tuple(tuple(row) for row in a)


def _root_lengths(a) -> list[Fraction]:
    """Squared lengths ``d_i`` with ``d_i A_ij = d_j A_ji``, longest normalised to 2."""
    r = len(a)
    d: list[Fraction | None] = [None] * r
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if j != i and a[i][j] and d[j] is None:
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    longest = max(d)
    return [2 * x / longest for x in d]


@lru_cache(maxsize=None)
def positive_roots(t: GroupType) -> tuple[tuple[int, ...], ...]:
    """Positive roots in simple-root coordinates, generated by root strings."""
    a = cartan_matrix(t)
    r = t.rank
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                # <beta, alpha_i^vee> = sum_j b_j A[i][j]
                pairing = sum(beta[j] * a[i][j] for j in range(r))
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        q += 1
                    else:
                        break
                if q - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(roots, key=lambda b: (sum(b), b)))


def highest_root(t: GroupType) -> tuple[int, ...]:
    return positive_roots(t)[-1]


def dual_coxeter(t: GroupType) -> int:
    """Dual Coxeter number: one plus the height of the highest coroot.

    The highest root theta is read off the generated root system; its coroot
    has coefficients ``a_i * |alpha_i|^2 / |theta|^2`` on the simple coroots.
    """
    a = cartan_matrix(t)
    lengths = _root_lengths(a)
    theta = highest_root(t)
    theta_len = sum(
        theta[i] * theta[j] * lengths[i] * a[i][j] / 2
        for i in range(t.rank)
        for j in range(t.rank)
    )
    comarks = [theta[i] * lengths[i] / theta_len for i in range(t.rank)]
    total = 1 + sum(comarks)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral dual Coxeter number for {t}")
    return int(total)


@dataclass(frozen=True)
class SL2Character:
    """Weight multiplicities of a finite-dimensional SL2 representation."""

    mult: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(w): int(k) for w, k in self.mult.items() if k}
        for w, k in clean.items():
            if k < 0:
                raise ValueError(f"negative multiplicity {k} at weight {w}")
            if clean.get(-w, 0) != k:
                raise ValueError(f"character not symmetric at weight {w}")
        object.__setattr__(self, "mult", MappingProxyType(dict(sorted(clean.items()))))

    def __getitem__(self, w: int) -> int:
        return self.mult.get(w, 0)

    def __add__(self, other: "SL2Character") -> "SL2Character":
        total = Counter(self.mult)
        total.update(other.mult)
        return SL2Character(total)

    def __mul__(self, other: "SL2Character") -> "SL2Character":
        prod: Counter = Counter()
        for w1, k1 in self.mult.items():
            for w2, k2 in other.mult.items():
                prod[w1 + w2] += k1 * k2
        return SL2Character(prod)

    def __eq__(self, other):
        if not isinstance(other, SL2Character):
            return NotImplemented
        return dict(self.mult) == dict(other.mult)

    def __hash__(self):
        return hash(tuple(self.mult.items()))

    def __repr__(self):
        return f"SL2Character({dict(self.mult)!r})"

    @property
    def dim(self) -> int:
        return sum(self.mult.values())

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(self.mult)


def irrep_character(m: int) -> SL2Character:
    """Character of ``Sym^m V``: weights m, m-2, ..., -m."""
    if m < 0:
        raise ValueError(f"highest weight must be nonnegative, got {m}")
    return SL2Character({w: 1 for w in range(-m, m + 1, 2)})


def decompose(ch: SL2Character) -> dict[int, int]:
    """Peel irreducibles off ``ch`` from the top weight down.

    Returns ``{highest weight: multiplicity}`` in strictly decreasing order.
    Raises ValueError if a negative multiplicity would be required.
    """
    rest = Counter(ch.mult)
    out: dict[int, int] = {}
    while rest:
        top = max(rest)
        k = rest[top]
        if top < 0 or k < 0:
            raise ValueError(f"character is not a nonnegative combination of irreducibles: {ch!r}")
        out[top] = k
        for w in range(-top, top + 1, 2):
            rest[w] -= k
            if rest[w] < 0:
                raise ValueError(
                    f"character is not a nonnegative combination of irreducibles: {ch!r}"
                )
            if rest[w] == 0:
                del rest[w]
    return out


def tensor_decompose(a: SL2Character, b: SL2Character) -> dict[int, int]:
    return decompose(a * b)


def character_from_decomposition(parts: Mapping[int, int]) -> SL2Character:
    total: Counter = Counter()
    for m, k in parts.items():
        for w in range(-m, m + 1, 2):
            total[w] += k
    return SL2Character(total)


def tensor_power_character(m: int) -> SL2Character:
    """Character of ``V^{(x)m}``; weight w has multiplicity C(m, (m+w)/2)."""
    if m < 0:
        raise ValueError(f"tensor power must be nonnegative, got {m}")
    return SL2Character({2 * j - m: comb(m, j) for j in range(m + 1)})


def tensor_power_multiplicities(m: int) -> dict[int, int]:
    """Decomposition of ``V^{(x)m}`` by iterated Clebsch-Gordan peeling."""
    if m < 0:
        raise ValueError(f"tensor power must be nonnegative, got {m}")
    v = irrep_character(1)
    parts = {0: 1}
    for _ in range(m):
        step: Counter = Counter()
        for top, k in parts.items():
            for hw, j in tensor_decompose(irrep_character(top), v).items():
                step[hw] += k * j
        parts = dict(sorted(step.items(), reverse=True))
    return parts


def central_parity(c: SL2Character | Iterable[int]) -> int:
    """Common parity of the weights, i.e. the action of -1 in the centre."""
    weights = c.weights if isinstance(c, SL2Character) else tuple(c)
    parities = {w % 2 for w in weights}
    if len(parities) != 1:
        raise ValueError(f"weights do not share one parity: {sorted(weights)}")
    return parities.pop()

"""Graded modules built from V[t]: the coinvariant algebra, R_m and S_n.

Everything is brute force over Q. A polynomial quotient ``Q[t_1..t_m]/I``
is presented degree by degree: the degree-d part of the ideal is row
reduced in the monomial basis (lexicographically descending, so pivots
land on the largest monomials) and the non-pivot monomials form the
quotient basis. ``Sym^m(V[t]) / I Sym^m(V[t])`` is then the space of
S_m-invariants in ``V^{(x)m} (x) Q[t]/I``, cut out with the Reynolds
averaging operator since we are in characteristic 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from ._linalg import Span, rref
from .liecore import SL2Character, decompose, irrep_character, tensor_power_character

__all__ = [
    "QuotientPresentation",
    "GradedModule",
    "elementary_symmetric",
    "coinvariant_presentation",
    "coinvariant_hilbert",
    "q_factorial",
    "graded_character_R",
    "character_S",
    "hom_mult",
    "gtgen_check",
    "S_MODELS",
]

MAX_CHARACTER_M = 4
MAX_GENERATION_M = 3
MAX_S_N = 6
S_MODELS = ("quotient-by-t", "fiber-tensor")

Monomial = tuple  # exponent vector
Poly = dict  # Monomial -> Fraction


def _monomials(nvars: int, degree: int) -> list[Monomial]:
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return sorted(out, reverse=True)


def elementary_symmetric(nvars: int, k: int) -> Poly:
    poly = {}
    for subset in itertools.combinations(range(nvars), k):
        poly[tuple(int(i in subset) for i in range(nvars))] = Fraction(1)
    return poly


def _mul_monomial(poly: Poly, mono: Monomial) -> Poly:
    return {tuple(a + b for a, b in zip(m, mono)): c for m, c in poly.items()}


def _permute(mono: Monomial, perm: tuple[int, ...]) -> Monomial:
    # factor i moves to slot perm[i]
    out = [0] * len(mono)
    for i, a in enumerate(mono):
        out[perm[i]] = a
    return tuple(out)


@dataclass(frozen=True)
class QuotientPresentation:
    """Degree-wise presentation of ``Q[t_1..t_n] / (generators)``.

    ``standard[d]`` lists the monomials that span the quotient in degree d;
    ``reducers[d]`` holds the reduced ideal rows over ``monomials[d]``.
    The ideal is checked to fill every degree >= ``truncation``.
    """

    nvars: int
    truncation: int
    monomials: tuple
    reducers: tuple
    pivots: tuple
    standard: tuple

    @classmethod
    def build(cls, nvars: int, generators: list[Poly], truncation: int) -> "QuotientPresentation":
        monos, reducers, pivots, standard = [], [], [], []
        for d in range(truncation + 1):
            basis = _monomials(nvars, d)
            index = {m: i for i, m in enumerate(basis)}
            rows = []
            for gen in generators:
                gdeg = sum(next(iter(gen)))
                if gdeg > d:
                    continue
                for mono in _monomials(nvars, d - gdeg):
                    row = [Fraction(0)] * len(basis)
                    for m, c in _mul_monomial(gen, mono).items():
                        row[index[m]] += c
                    rows.append(row)
            red, piv = rref(rows, len(basis))
            monos.append(tuple(basis))
            reducers.append(tuple(tuple(r) for r in red))
            pivots.append(tuple(piv))
            pset = set(piv)
            standard.append(tuple(m for i, m in enumerate(basis) if i not in pset))
        if standard[truncation]:
            raise ArithmeticError(
                f"quotient is nonzero in degree {truncation}; truncation too small"
            )
        return cls(nvars, truncation, tuple(monos), tuple(reducers), tuple(pivots), tuple(standard))

    @property
    def top_degree(self) -> int:
        return max(d for d, std in enumerate(self.standard) if std)

    def hilbert(self) -> list[int]:
        return [len(std) for std in self.standard[: self.top_degree + 1]]

    def normal_form(self, poly: Poly) -> Poly:
        """Coordinates of ``poly`` on the standard monomials."""
        by_degree: dict[int, Poly] = {}
        for m, c in poly.items():
            if c:
                by_degree.setdefault(sum(m), {})[m] = c
        out: Poly = {}
        for d, part in by_degree.items():
            if d >= self.truncation:
                continue
            basis = self.monomials[d]
            index = {m: i for i, m in enumerate(basis)}
            vec = [Fraction(0)] * len(basis)
            for m, c in part.items():
                vec[index[m]] += c
            for row, p in zip(self.reducers[d], self.pivots[d]):
                if vec[p]:
                    f = vec[p]
                    vec = [a - f * b for a, b in zip(vec, row)]
            pset = set(self.pivots[d])
            for i, m in enumerate(basis):
                if i not in pset and vec[i]:
                    out[m] = vec[i]
        return out


@lru_cache(maxsize=None)
def coinvariant_presentation(m: int) -> QuotientPresentation:
    """``Q[t_1..t_m] / (sigma_1, ..., sigma_m)``, truncated at m(m-1)/2 + 1."""
    gens = [elementary_symmetric(m, k) for k in range(1, m + 1)]
    return QuotientPresentation.build(m, gens, m * (m - 1) // 2 + 1)


@lru_cache(maxsize=None)
def _point_presentation(n: int) -> QuotientPresentation:
    """``Q[t_1..t_n] / (t_1, ..., t_n)``."""
    gens = [{tuple(int(i == j) for j in range(n)): Fraction(1)} for i in range(n)]
    return QuotientPresentation.build(n, gens, 1)


def _check_range(name: str, value: int, lo: int, hi: int) -> None:
    if not lo <= value <= hi:
        raise ValueError(f"{name}={value} outside the supported range {lo}..{hi}")


def coinvariant_hilbert(m: int) -> list[int]:
    """Graded dimension of the coinvariant algebra, as q-coefficients."""
    _check_range("m", m, 1, MAX_CHARACTER_M)
    return coinvariant_presentation(m).hilbert()


def q_factorial(m: int) -> list[int]:
    """Coefficients of ``prod_{i=1}^m (1 + q + ... + q^{i-1})``."""
    coeffs = [1]
    for i in range(1, m + 1):
        nxt = [0] * (len(coeffs) + i - 1)
        for d, c in enumerate(coeffs):
            for j in range(i):
                nxt[d + j] += c
        coeffs = nxt
    return coeffs


@dataclass(frozen=True)
class GradedModule:
    """An SL2 character attached to each nonnegative degree."""

    pieces: Mapping[int, SL2Character]

    def __post_init__(self):
        clean = {d: ch for d, ch in sorted(self.pieces.items()) if ch.dim}
        if any(d < 0 for d in clean):
            raise ValueError("degrees must be nonnegative")
        object.__setattr__(self, "pieces", MappingProxyType(clean))

    def __getitem__(self, d: int) -> SL2Character:
        return self.pieces.get(d, SL2Character())

    def total(self) -> SL2Character:
        out = SL2Character()
        for ch in self.pieces.values():
            out = out + ch
        return out

    def degrees_of(self, m: int) -> dict[int, int]:
        """Degree -> multiplicity of the irreducible Sym^m V."""
        out = {}
        for d, ch in self.pieces.items():
            k = decompose(ch).get(m, 0)
            if k:
                out[d] = k
        return out

    def to_dict(self) -> dict:
        return {
            str(d): {str(hw): k for hw, k in decompose(ch).items()}
            for d, ch in self.pieces.items()
        }


class _InvariantModel:
    """``V^{(x)m} (x) Q[t]/I`` with the diagonal S_m action.

    Basis vectors are pairs (spins, standard monomial) where spins is a
    tuple of +1/-1 picking the weight vector in each tensor factor.
    """

    def __init__(self, pres: QuotientPresentation):
        self.pres = pres
        m = pres.nvars
        self.m = m
        self.basis = [
            (spins, mono)
            for d in range(pres.truncation)
            for mono in pres.standard[d]
            for spins in itertools.product((1, -1), repeat=m)
        ]
        self.index = {b: i for i, b in enumerate(self.basis)}
        self.perms = list(itertools.permutations(range(m)))

    def vector(self, terms: dict) -> list[Fraction]:
        v = [Fraction(0)] * len(self.basis)
        for b, c in terms.items():
            v[self.index[b]] += c
        return v

    def _tensor_poly(self, spins, poly: Poly) -> dict:
        return {(spins, mono): c for mono, c in self.pres.normal_form(poly).items()}

    def act(self, perm, spins, mono) -> dict:
        new_spins = _permute(spins, perm)
        return self._tensor_poly(new_spins, {_permute(mono, perm): Fraction(1)})

    def reynolds(self, spins, mono) -> dict:
        out: dict = {}
        scale = Fraction(1, len(self.perms))
        for perm in self.perms:
            for b, c in self.act(perm, spins, mono).items():
                out[b] = out.get(b, 0) + c * scale
        return out

    def invariant_blocks(self) -> dict[tuple[int, int], list[list[Fraction]]]:
        """(weight, degree) -> basis of the S_m-invariants in that block."""
        blocks: dict[tuple[int, int], list] = {}
        for spins, mono in self.basis:
            blocks.setdefault((sum(spins), sum(mono)), []).append((spins, mono))
        out = {}
        for key, members in blocks.items():
            span = Span(len(self.basis))
            for spins, mono in members:
                span.add(self.vector(self.reynolds(spins, mono)))
            if len(span):
                out[key] = span.rows
        return out

    def graded_character(self) -> GradedModule:
        dims: dict[int, dict[int, int]] = {}
        for (w, d), rows in self.invariant_blocks().items():
            dims.setdefault(d, {})[w] = len(rows)
        return GradedModule({d: SL2Character(ch) for d, ch in dims.items()})

    def loop_operator(self, x: str, a: int, v: list[Fraction]) -> list[Fraction]:
        """Apply ``sum_i x^{(i)} t_i^a`` for x in {e, f, h}."""
        out: dict = {}
        for coeff, (spins, mono) in zip(v, self.basis):
            if not coeff:
                continue
            for i in range(self.m):
                s = spins[i]
                if x == "h":
                    scale, new = s, spins
                elif x == "e":
                    if s == 1:
                        continue
                    scale, new = 1, spins[:i] + (1,) + spins[i + 1 :]
                elif x == "f":
                    if s == -1:
                        continue
                    scale, new = 1, spins[:i] + (-1,) + spins[i + 1 :]
                else:
                    raise ValueError(f"unknown generator {x!r}")
                shifted = tuple(e + a * (j == i) for j, e in enumerate(mono))
                for b, c in self._tensor_poly(new, {shifted: Fraction(1)}).items():
                    out[b] = out.get(b, 0) + coeff * scale * c
        return self.vector(out)


@lru_cache(maxsize=None)
def _graded_R(m: int) -> GradedModule:
    return _InvariantModel(coinvariant_presentation(m)).graded_character()


def graded_character_R(m: int, grading: str = "coinvariant") -> GradedModule:
    """q-graded SL2 character of ``R_m = Sym^m(V[t]) / (sigma_1..sigma_m)``.

    ``grading="coinvariant"`` uses polynomial degree, which puts Sym^m V in
    degree 0. ``grading="filtration"`` reindexes by ``top - degree`` so the
    highest weight component sits in the highest index.
    """
    _check_range("m", m, 1, MAX_CHARACTER_M)
    module = _graded_R(m)
    if grading == "coinvariant":
        return module
    if grading == "filtration":
        top = m * (m - 1) // 2
        return GradedModule({top - d: ch for d, ch in module.pieces.items()})
    raise ValueError(f"unknown grading {grading!r}; use 'coinvariant' or 'filtration'")


@lru_cache(maxsize=None)
def _quotient_S(n: int) -> SL2Character:
    return _InvariantModel(_point_presentation(n)).graded_character().total()


def character_S(n: int, model: str = "quotient-by-t") -> SL2Character:
    """Character of S_n, either as the literal quotient or as the kernel fibre."""
    if model not in S_MODELS:
        raise ValueError(f"unknown model {model!r}; expected one of {S_MODELS}")
    _check_range("n", n, 0, MAX_S_N)
    if n == 0:
        return irrep_character(0)
    if model == "fiber-tensor":
        return tensor_power_character(n)
    return _quotient_S(n)


def hom_mult(m: int, c: SL2Character) -> int:
    """Multiplicity of Sym^m V in ``c``: the dimension of equivariant maps from it."""
    return decompose(c).get(m, 0)


def gtgen_check(m: int) -> bool:
    """Does the degree-0 Sym^m V component generate R_m under g[t]?

    The operators ``e t^a, f t^a, h t^a`` (a up to the top coinvariant
    degree) act on the full model; the orbit of the degree-0 invariants is
    closed under them and its dimension compared with dim R_m = 2^m.
    """
    _check_range("m", m, 1, MAX_GENERATION_M)
    model = _InvariantModel(coinvariant_presentation(m))
    blocks = model.invariant_blocks()
    invariants = Span(len(model.basis), (row for rows in blocks.values() for row in rows))
    if len(invariants) != 2**m:
        raise ArithmeticError(f"R_{m} has dimension {len(invariants)}, expected {2 ** m}")

    seed = [row for (w, d), rows in blocks.items() if d == 0 for row in rows]
    seed_char = SL2Character(
        {w: len(rows) for (w, d), rows in blocks.items() if d == 0}
    )
    if seed_char != irrep_character(m):
        raise ArithmeticError(f"degree-0 part of R_{m} is {seed_char}, not Sym^{m} V")

    top = m * (m - 1) // 2
    ops = [(x, a) for a in range(top + 1) for x in "efh"]
    span = Span(len(model.basis), seed)
    frontier = list(span.rows)
    while frontier:
        fresh = []
        for v in frontier:
            for x, a in ops:
                w = model.loop_operator(x, a, v)
                if w not in invariants:
                    raise ArithmeticError("loop operator left the invariant subspace")
                if span.add(w):
                    fresh.append(w)
        frontier = fresh
    return len(span) == len(invariants)

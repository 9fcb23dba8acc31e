"""Borel-Weil-Bott cohomology of tautological bundles on Bun_SL2, and the
Hom-degree bookkeeping behind the semiorthogonality and full-faithfulness
arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .alcove import classify_sl2
from .fusion import verlinde_dim
from .liecore import GroupType, dual_coxeter, tensor_power_multiplicities

__all__ = [
    "CohomologyAnswer",
    "UnsupportedTwistError",
    "SL2_DUAL_COXETER",
    "cohomology",
    "hom_parity_obstruction",
    "hom_amplitude",
    "max_regular_length",
    "SemiorthogonalityCertificate",
    "semiorthogonality_certificate",
]

SL2_DUAL_COXETER = dual_coxeter(GroupType("A", 1))


class UnsupportedTwistError(NotImplementedError):
    """Twisted conformal blocks at positive level are not computed."""


@dataclass(frozen=True)
class CohomologyAnswer:
    vanishes: bool
    degree: int | None = None
    dim: int | None = None

    @classmethod
    def vanishing(cls) -> "CohomologyAnswer":
        return cls(True)

    def to_dict(self) -> dict:
        if self.vanishes:
            return {"vanishes": True}
        return {"vanishes": False, "degree": self.degree, "dim": self.dim}


def _check_twist(xi: int) -> None:
    if xi not in (0, 1):
        raise ValueError(f"twist parity must be 0 or 1, got {xi}")


def cohomology(c: int, g: int, ins: Sequence[int] = (), xi: int = 0) -> CohomologyAnswer:
    """Cohomology of ``L^c (x) V`` on Bun_SL2^xi for insertions of highest weights ``ins``.

    Vanishes identically for -2h^vee < c < 0. For c >= 0 it vanishes if an
    insertion is singular, and otherwise sits in the single degree
    ``sum(length)`` with dimension the level-c Verlinde number of the
    reduced insertions.
    """
    _check_twist(xi)
    h = SL2_DUAL_COXETER
    if c <= -2 * h:
        raise ValueError(f"level {c} is in the Serre-dual range c <= {-2 * h}; unsupported")
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    if any(lam < 0 for lam in ins):
        raise ValueError(f"insertion weights must be nonnegative, got {list(ins)}")
    if c < 0:
        return CohomologyAnswer.vanishing()
    if xi == 1 and c > 0:
        raise UnsupportedTwistError(
            f"unsupported: twisted positive level (xi=1, c={c}); "
            "twisted conformal block dimensions are not implemented"
        )
    degree = 0
    reduced = []
    for lam in ins:
        cls = classify_sl2(c, lam)
        if not cls.regular:
            return CohomologyAnswer.vanishing()
        degree += cls.length
        reduced.append(cls.reduced)
    return CohomologyAnswer(False, degree, verlinde_dim(c, g, reduced))


def hom_parity_obstruction(m: int, n: int) -> bool:
    """True when central characters force every Hom between the E_m and E_n images to vanish."""
    return (m - n) % 2 == 1


def max_regular_length(m: int, n: int) -> int | None:
    """Largest level-0 length among the regular components of ``V^{(x)(m+n)}``.

    Returns None when every component is singular.
    """
    best = None
    for lam in tensor_power_multiplicities(m + n):
        cls = classify_sl2(0, lam)
        if cls.regular and (best is None or cls.length > best):
            best = cls.length
    return best


def hom_amplitude(m: int, n: int) -> tuple[int, int]:
    """Cohomological amplitude ``[0, (m+n)//2]`` of Hom stalks between E_m and E_n."""
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if hom_parity_obstruction(m, n):
        raise ValueError(f"parity mismatch: m={m}, n={n}; Homs vanish by central character")
    lo, hi = 0, (m + n) // 2
    top = max_regular_length(m, n)
    if top is not None and not lo <= top <= hi:
        raise ArithmeticError(f"enumerated length {top} escapes the amplitude [{lo}, {hi}]")
    return lo, hi


@dataclass(frozen=True)
class SemiorthogonalityCertificate:
    m: int
    n: int
    amplitude_length_after_degree0: int
    diagonal_codim: int
    passed: bool

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "amplitude_length_after_degree0": self.amplitude_length_after_degree0,
            "diagonal_codim": self.diagonal_codim,
            "pass": self.passed,
        }


def semiorthogonality_certificate(m: int, n: int) -> SemiorthogonalityCertificate:
    """Compare the Hom amplitude left after degree 0 with the codimension of the diagonal."""
    if not m > n >= 0:
        raise ValueError(f"need m > n >= 0, got m={m}, n={n}")
    if hom_parity_obstruction(m, n):
        raise ValueError(f"parity mismatch: m={m}, n={n}")
    _, hi = hom_amplitude(m, n)
    length = hi - 1
    codim = m + n - 1
    return SemiorthogonalityCertificate(m, n, length, codim, length < codim)

"""The verification sweep behind ``bunsod verify-all`` and the acceptance tests.

Each criterion is an exact comparison between two independent routes (or a
route and a frozen value), run over its full range and timed against its
budget.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from math import factorial
from typing import Callable

from . import alcove, bwb, coinv, fusion, liecore, sod
from .liecore import GroupType

__all__ = ["CheckResult", "CRITERIA", "run_criterion", "run_all"]


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: float | None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        budget = f" (budget {self.budget:g}s)" if self.budget else ""
        return f"[{status}] {self.number}. {self.name}: {self.detail} [{self.seconds:.2f}s{budget}]"

    def to_dict(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "pass": self.passed,
            "detail": self.detail,
            "budget_s": self.budget,
        }


class _Failure(Exception):
    pass


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise _Failure(msg)


def alcove_agreement() -> str:
    a1 = GroupType("A", 1)
    n = 0
    for c in range(7):
        for lam in range(41):
            closed = alcove.classify_sl2(c, lam).as_labels()
            searched = alcove.classify_bfs(a1, c, lam)
            _expect(closed == searched, f"A1 c={c} lambda={lam}: {closed} != {searched}")
            n += 1
    for rank in (2, 3):
        t = GroupType("A", rank)
        for c in range(4):
            for lam in itertools.product(range(9), repeat=rank):
                if sum(lam) > 8:
                    continue
                residue = alcove.classify_typeA(rank, c, lam)
                searched = alcove.classify_bfs(t, c, lam)
                _expect(residue == searched, f"A{rank} c={c} lambda={lam}: {residue} != {searched}")
                n += 1
    return f"{n} weights agree"


def level_zero_closed_form() -> str:
    for lam in range(41):
        got = alcove.classify_sl2(0, lam)
        want = alcove.AlcoveClass.singular() if lam % 2 else alcove.AlcoveClass(True, lam // 2, 0)
        _expect(got == want, f"lambda={lam}: {got} != {want}")
    return "lambda <= 40: odd singular, even (lambda/2, 0)"


def verlinde_suite() -> str:
    worst = 0.0
    for k in range(9):
        for g in range(5):
            for size in range(5):
                for ins in itertools.combinations_with_replacement(range(k + 1), size):
                    exact = fusion.verlinde_dim(k, g, ins)
                    approx = fusion.verlinde_dim_trig(k, g, ins)
                    worst = max(worst, abs(exact - approx))
                    _expect(abs(exact - approx) < 1e-6, f"k={k} g={g} ins={ins}: {exact} vs {approx}")
    for g in range(11):
        _expect(fusion.verlinde_dim(1, g) == 2**g, f"level 1 genus {g}")
    for k in range(21):
        _expect(fusion.verlinde_dim(k, 1) == k + 1, f"level {k} genus 1")
    for k in range(6):
        for g in range(1, 4):
            for size in range(3):
                for ins in itertools.combinations_with_replacement(range(k + 1), size):
                    whole = fusion.verlinde_dim(k, g, ins)
                    cut = sum(fusion.verlinde_dim(k, g - 1, ins + (a, a)) for a in range(k + 1))
                    _expect(whole == cut, f"handle cutting k={k} g={g} ins={ins}")
    return f"trig agreement (max error {worst:.1e}), 2^g, k+1 and handle cutting hold"


def bwb_fixtures() -> str:
    for g in range(11):
        for xi in (0, 1):
            ans = bwb.cohomology(0, g, [], xi)
            _expect(ans == bwb.CohomologyAnswer(False, 0, 1), f"g={g} xi={xi}: {ans}")
    n = 0
    for c in (-1, -2, -3):
        for size in range(4):
            for ins in itertools.combinations_with_replacement(range(21), size):
                for xi in (0, 1):
                    ans = bwb.cohomology(c, 2, list(ins), xi)
                    _expect(ans.vanishes, f"c={c} ins={ins} xi={xi}: {ans}")
                    n += 1
    return f"H^0(O) = k in degree 0; {n} negative-level cases vanish"


def coinvariant_suite() -> str:
    for m in range(1, 5):
        hilb = coinv.coinvariant_hilbert(m)
        _expect(hilb == coinv.q_factorial(m), f"Hilbert series m={m}: {hilb}")
        _expect(sum(hilb) == factorial(m), f"total dimension m={m}")
        total = coinv.graded_character_R(m).total()
        _expect(total == liecore.tensor_power_character(m), f"R_{m} total character")
    for model in coinv.S_MODELS:
        for m in range(1, 7):
            for n in range(m):
                k = coinv.hom_mult(m, coinv.character_S(n, model))
                _expect(k == 0, f"Hom(Sym^{m} V, S_{n}) = {k} in model {model}")
    for m in range(1, 4):
        _expect(coinv.gtgen_check(m), f"g[t]-generation fails for m={m}")
    return "[m]_q!, m!, sum of R_m = V^m, Hom vanishing (both models), g[t]-generation"


def certificates() -> str:
    n_cert = 0
    for m in range(13):
        for n in range(m):
            if (m - n) % 2:
                continue
            cert = bwb.semiorthogonality_certificate(m, n)
            _expect(cert.passed, f"certificate fails for m={m} n={n}")
            n_cert += 1
    for total in range(9):
        for m in range(total + 1):
            n = total - m
            if (m - n) % 2:
                continue
            lo, hi = bwb.hom_amplitude(m, n)
            top = bwb.max_regular_length(m, n)
            _expect(top is not None and lo <= top <= hi, f"amplitude m={m} n={n}")
    return f"{n_cert} certificates pass; amplitudes contain the enumerated maxima"


def block_counts() -> str:
    for g in range(2, 13):
        semi = sod.enumerate_blocks("semistable", sod.A1, g)
        coarse = sod.enumerate_blocks("coarse", sod.A1, g)
        _expect(len(semi) == 4 * g - 2, f"semistable g={g}: {len(semi)}")
        _expect(len(coarse) == 2 * g - 1, f"coarse g={g}: {len(coarse)}")
    pairs = sod.enumerate_blocks("coarse", sod.A1, 2).pairs()
    _expect(pairs == [(0, 0), (0, 1), (1, 0)], f"genus-2 coarse table {pairs}")
    return "4g-2 and 2g-1 for 2 <= g <= 12; genus-2 table [(0,0),(0,1),(1,0)]"


def hh_additivity() -> str:
    for g in range(2, 6):
        report = sod.hh_additivity_check(g)
        _expect(report.passed, f"g={g}: {report.lhs} != {report.rhs}")
    report = sod.hh_additivity_check(2)
    _expect(str(report.lhs) == "2s^-1+4+2s", f"genus-2 lhs {report.lhs}")
    parts = [str(p) for _, p in report.terms]
    _expect(parts == ["1", "2s^-1+2+2s", "1"], f"genus-2 block terms {parts}")
    totals = [p.total() for _, p in report.terms]
    _expect(report.lhs.total() == 8 and totals == [1, 6, 1], f"genus-2 totals {totals}")
    return "g=2..5 exact; g=2: 2s^-1+4+2s = (1)+(2s^-1+2+2s)+(1), 8 = 1+6+1"


def moduli_validation() -> str:
    for g in range(2, 7):
        checks = sod.moduli_validations(g)
        failed = [k for k, ok in checks.items() if not ok]
        _expect(not failed, f"g={g} failed {failed}")
    return "divisibility, Poincare specialisation, top degree, h^{0,0}=1 for g=2..6"


CRITERIA: list[tuple[int, str, Callable[[], str], float | None]] = [
    (1, "alcove oracle agreement", alcove_agreement, 10.0),
    (2, "level-0 closed form", level_zero_closed_form, None),
    (3, "Verlinde dimensions", verlinde_suite, 30.0),
    (4, "Borel-Weil-Bott fixtures", bwb_fixtures, None),
    (5, "coinvariant suite", coinvariant_suite, 60.0),
    (6, "semiorthogonality certificates", certificates, None),
    (7, "block counts", block_counts, None),
    (8, "Hochschild additivity", hh_additivity, 10.0),
    (9, "moduli Hodge validations", moduli_validation, None),
]


def run_criterion(number: int) -> CheckResult:
    num, name, fn, budget = CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        detail = fn()
        passed = True
    except _Failure as exc:
        detail, passed = str(exc), False
    elapsed = time.perf_counter() - start
    if passed and budget is not None and elapsed >= budget:
        passed = False
        detail = f"{detail}; over budget"
    return CheckResult(num, name, passed, detail, elapsed, budget)


def run_all() -> list[CheckResult]:
    return [run_criterion(num) for num, *_ in CRITERIA]

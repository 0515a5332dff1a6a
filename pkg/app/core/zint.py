"""
ℤ 위 퍼지 부분군 데모

μ1, μ2는 공식으로만 평가하며 무한 객체를 만들지 않습니다.
(μ1+μ2)(x) = Sup{μ1(y) ∧ μ2(x-y)} 를 |y| ≤ window 에서 정확한 유리수로 근사하고,
1/2-레벨 합 (μ1)_{1/2} + (μ2)_{1/2} 을 법(modulus)으로 계산합니다.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from app.core.errors import GradualError
from app.core.levels import ONE, ZERO, as_level, format_rational

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class ZIntFormula(str, Enum):
    """공식 기반 등급"""
    MU1 = "mu1"
    MU2 = "mu2"


_PRIME = {ZIntFormula.MU1: 2, ZIntFormula.MU2: 3}


def valuation(x: int, p: int) -> int:
    """p^t ‖ x 인 t (x ≠ 0)"""
    t = 0
    while x % p == 0:
        x //= p
        t += 1
    return t


def grade_at_depth(which: ZIntFormula, t: int) -> Fraction:
    """p^t ‖ x 인 x 의 등급 (t ≥ 1)"""
    if which is ZIntFormula.MU1:
        return 1 - Fraction(2, 3) ** t
    return HALF - Fraction(1, 3) ** t


@dataclass(frozen=True)
class ZIntFormulaGrade:
    which: ZIntFormula

    def __call__(self, x: int) -> Fraction:
        if x == 0:
            return ONE
        t = valuation(x, _PRIME[self.which])
        if t == 0:
            return ZERO
        return grade_at_depth(self.which, t)

    def level_modulus(self, alpha: Fraction) -> Optional[int]:
        """α-레벨 = dℤ 인 d, 레벨이 {0} 이면 None"""
        alpha = as_level(alpha)
        limit = ONE if self.which is ZIntFormula.MU1 else HALF
        if alpha >= limit:
            return None
        t = 1
        while grade_at_depth(self.which, t) < alpha:
            t += 1
        return _PRIME[self.which] ** t


mu1 = ZIntFormulaGrade(ZIntFormula.MU1)
mu2 = ZIntFormulaGrade(ZIntFormula.MU2)


def value_at(x: int, y: int) -> Fraction:
    """μ1(y) ∧ μ2(x - y)"""
    return min(mu1(y), mu2(x - y))


def scan_order(window: int):
    """0, 1, -1, 2, -2, … (|y| 증가 순)"""
    yield 0
    for k in range(1, window + 1):
        yield k
        yield -k


def sum_modulus(first: Optional[int], second: Optional[int]) -> Optional[int]:
    """d1ℤ + d2ℤ = gcd(d1,d2)ℤ ({0} 은 None)"""
    if first is None:
        return second
    if second is None:
        return first
    return gcd(first, second)


def witness_reach(t: int) -> int:
    """x = 2 에서 t-목격자가 반드시 있는 |y| 상한

    y ≡ 0 (mod 4), y ≡ 2 (mod 3^t) 이면 μ1(y) ≥ 5/9, μ2(2-y) ≥ 1/2 - 3^-t 이고,
    이 잉여류는 [-2·3^t, 2·3^t] 안에 원소를 가집니다.
    """
    return 2 * 3 ** t


@dataclass
class ZIntReport:
    x: int
    window: int
    t_max: int
    running_max: Fraction
    argmax: int
    bound: Fraction = HALF
    witnesses: Dict[int, Optional[Tuple[int, Fraction]]] = field(default_factory=dict)
    mu1_half_modulus: Optional[int] = None
    mu2_half_modulus: Optional[int] = None
    sum_half_modulus: Optional[int] = None

    @property
    def below_bound(self) -> bool:
        return self.running_max < self.bound

    @property
    def x_in_half_sum(self) -> bool:
        if self.sum_half_modulus is None:
            return self.x == 0
        return self.x % self.sum_half_modulus == 0

    @property
    def checks(self) -> Dict[str, bool]:
        if self.x != 2:
            return {}
        checks = {
            f"witness t = {t}": hit is not None
            for t, hit in self.witnesses.items()
            if witness_reach(t) <= self.window
        }
        checks["running max < 1/2"] = self.below_bound
        checks["2 not in (mu1)_1/2 + (mu2)_1/2"] = not self.x_in_half_sum
        return checks

    def lines(self) -> List[str]:
        def modulus(d: Optional[int]) -> str:
            return "{0}" if d is None else f"{d}Z"

        out = [
            f"x = {self.x}, window = {self.window}, t_max = {self.t_max}",
            f"running max = {format_rational(self.running_max)} at y = {self.argmax}",
            f"bound = {format_rational(self.bound)}",
        ]
        for t, hit in self.witnesses.items():
            target = format_rational(HALF - Fraction(1, 3) ** t)
            if hit is None:
                out.append(f"t = {t}: no witness >= {target} within window")
            else:
                out.append(f"t = {t}: y = {hit[0]}, value = {format_rational(hit[1])} >= {target}")
        out.append(
            f"(mu1)_1/2 = {modulus(self.mu1_half_modulus)}, (mu2)_1/2 = {modulus(self.mu2_half_modulus)}, "
            f"sum = {modulus(self.sum_half_modulus)}"
        )
        for name, ok in self.checks.items():
            out.append(f"{name}: {'ok' if ok else 'FAIL'}")
        return out


def zint_report(x: int, window: int, t_max: int) -> ZIntReport:
    """|y| ≤ window 에서 μ1(y) ∧ μ2(x-y) 의 최댓값과 t별 목격자"""
    if window < 1 or t_max < 1:
        raise GradualError("window와 t_max는 1 이상이어야 합니다")
    best, argmax = ZERO, 0
    witnesses: Dict[int, Optional[Tuple[int, Fraction]]] = {t: None for t in range(1, t_max + 1)}
    targets = {t: HALF - Fraction(1, 3) ** t for t in witnesses}
    for y in scan_order(window):
        value = value_at(x, y)
        if value > best:
            best, argmax = value, y
        for t, target in targets.items():
            if witnesses[t] is None and value >= target:
                witnesses[t] = (y, value)
    m1 = mu1.level_modulus(HALF)
    m2 = mu2.level_modulus(HALF)
    report = ZIntReport(
        x=x,
        window=window,
        t_max=t_max,
        running_max=best,
        argmax=argmax,
        witnesses=witnesses,
        mu1_half_modulus=m1,
        mu2_half_modulus=m2,
        sum_half_modulus=sum_modulus(m1, m2),
    )
    logger.info(f"ℤ 데모: x={x}, window={window}, 최댓값 {format_rational(best)}")
    return report

"""Analytic failure probability estimates and field-size guidance

Every estimate is an integer exponent eps with failure probability about q^eps. A
non-negative exponent means the bound says nothing (the estimate is vacuous).
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class ProbabilityEstimate:
    """A failure probability of the form q^log_q_failure

    Attributes
    ----------
    q: int
        The base
    log_q_failure: int
        The exponent
    """

    q: int
    log_q_failure: int

    @property
    def value(self) -> float:
        return float(self.q) ** self.log_q_failure

    @property
    def vacuous(self) -> bool:
        return self.log_q_failure >= 0

    @property
    def success_floor(self) -> float:
        """max(0, 1 - q^eps)"""
        return max(0.0, 1.0 - self.value)


def estimate_syndrome_fill(q: int, r: int, d: int, n: int, k: int) -> ProbabilityEstimate:
    """Probability that the syndrome components do not span A.E: q^(rd - (n - k))"""
    return ProbabilityEstimate(q, r * d - (n - k))


def estimate_basic_intersect(q: int, m: int, r: int, d: int) -> ProbabilityEstimate:
    """Probability that the intersection of the S·a_i^-1 is larger than E:
    q^(-(d - 1)(m - rd - r))"""
    return ProbabilityEstimate(q, -(d - 1) * (m - r * d - r))


def estimate_stray(q: int, m: int, r: int, d: int, c: int, t: int) -> ProbabilityEstimate:
    """Probability that a t-fold intersection holds elements outside E:
    q^(-((t - 1)m + r - t·rd))

    c does not enter the exponent; it is accepted so every estimate is called with
    the full experiment parameters.
    """
    return ProbabilityEstimate(q, -((t - 1) * m + r - t * r * d))


def default_t(q: int, r: int, c: int) -> int:
    """Smallest power of q that is at least r / c, for c >= 1"""
    t = 1
    while t * c < r:
        t *= q
    return t


def minimum_m_intersect(r: int, d: int, t: int) -> int:
    """Smallest m with (t - 1)m >= t·rd, the regime where stray elements vanish"""
    return -(-t * r * d // (t - 1))


def minimum_m_multiset(r: int, d: int, c: int) -> int:
    """rd - c + d - 1, the extension degree the multiset decoder needs to separate E"""
    return r * d - c + d - 1


def multiplicity_floor_outside(q: int, m: int, r: int, d: int, c: int) -> int:
    """Lower bound q^max(1, rd - c + d - m) - 1 on the multiplicity of x outside E"""
    return q ** max(1, r * d - c + d - m) - 1


def multiplicity_floor_support(q: int, d: int, c: int) -> int:
    """Lower bound q^(d - c) - 1 on the multiplicity of every element of E"""
    return q ** (d - c) - 1

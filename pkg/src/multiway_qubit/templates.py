"""Templates: the sum of coarse-grained terms over one multiway level.

Three independent routes compute the same exact vector:

* ``template_bruteforce`` visits every level-k word (compiled kernel when
  available) and sums its coarse-grained term;
* ``template_recurrence`` applies ``K*I - i*X`` k times, one level per step;
* ``template_closedform`` reads the answer off ``(K + i)**k`` computed by
  repeated squaring in O(log k) Gaussian-integer multiplies.

``template_binomial`` is a fourth check built on ``class_multiplicity``.
"""

from __future__ import annotations

import contextlib
import json
import math
import sys
from dataclasses import dataclass, field

from . import kernels
from .gaussian import MINUS_I, ZERO, GaussianInt, neg_i_power
from .multiway import ModelConfig
from .renormalization import QubitTerm, coarse_grain, count_marked

ALGORITHMS = ("bruteforce", "recurrence", "closedform")


@contextlib.contextmanager
def _unlimited_int_digits():
    # large templates have far more than the default 4300 decimal digits
    getter = getattr(sys, "get_int_max_str_digits", None)
    if getter is None:
        yield
        return
    previous = getter()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(previous)


@dataclass(frozen=True)
class TemplateVector:
    K: int
    level: int
    c0: GaussianInt
    c1: GaussianInt
    # only m mod 4 is recoverable from a QubitTerm; excluded from equality
    initial_m: int = field(default=0, compare=False)

    def norm_squared(self) -> int:
        return self.c0.norm() + self.c1.norm()

    def to_dict(self) -> dict:
        with _unlimited_int_digits():
            return {
                "K": self.K,
                "k": self.level,
                "c0": [str(self.c0.re), str(self.c0.im)],
                "c1": [str(self.c1.re), str(self.c1.im)],
            }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> TemplateVector:
        with _unlimited_int_digits():
            c0 = GaussianInt(*(int(x) for x in data["c0"]))
            c1 = GaussianInt(*(int(x) for x in data["c1"]))
        return cls(int(data["K"]), int(data["k"]), c0, c1)


@dataclass(frozen=True)
class WaveFunction:
    c0: complex
    c1: complex

    def __post_init__(self) -> None:
        for c in (self.c0, self.c1):
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise ValueError(f"non-finite wave function component {c}")

    def norm(self) -> float:
        return math.hypot(self.c0.real, self.c0.imag, self.c1.real, self.c1.imag)


def _from_basis(term: QubitTerm, on_basis: GaussianInt, off_basis: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    a = term.amplitude
    if term.basis == 0:
        return a * on_basis, a * off_basis
    return a * off_basis, a * on_basis


def _initial_m(term: QubitTerm) -> int:
    for m in range(4):
        if neg_i_power(m) == term.amplitude:
            return m
    raise AssertionError("unreachable: amplitude is a unit")


def template_bruteforce(cfg: ModelConfig, k: int) -> TemplateVector:
    if k < 0:
        raise ValueError("level must be nonnegative")
    cfg.require_within_cap(cfg.level_size(k))
    m0 = count_marked(cfg.initial_word, cfg.K)
    hist = kernels.mark_histogram(cfg.K, k)
    coeffs = [ZERO, ZERO]
    for m, count in enumerate(hist):
        total = m0 + m
        coeffs[total % 2] = coeffs[total % 2] + neg_i_power(total) * count
    return TemplateVector(cfg.K, k, coeffs[0], coeffs[1], initial_m=m0)


def template_recurrence(K: int, k: int, initial_term: QubitTerm) -> TemplateVector:
    if K < 1 or k < 0:
        raise ValueError("need K >= 1 and k >= 0")
    c0, c1 = _from_basis(initial_term, GaussianInt(1), ZERO)
    for _ in range(k):
        c0, c1 = K * c0 + MINUS_I * c1, K * c1 + MINUS_I * c0
    return TemplateVector(K, k, c0, c1, initial_m=_initial_m(initial_term))


def template_closedform(K: int, k: int, initial_term: QubitTerm) -> TemplateVector:
    if K < 1 or k < 0:
        raise ValueError("need K >= 1 and k >= 0")
    z = GaussianInt(K, 1) ** k
    c0, c1 = _from_basis(initial_term, GaussianInt(z.re), GaussianInt(0, -z.im))
    return TemplateVector(K, k, c0, c1, initial_m=_initial_m(initial_term))


def class_multiplicity(K: int, k: int, m: int) -> int:
    """Number of level-k words whose appended suffix holds exactly m copies of a_K."""
    if not 0 <= m <= k:
        raise ValueError(f"need 0 <= m <= k, got m={m}, k={k}")
    return math.comb(k, m) * K ** (k - m)


def template_binomial(K: int, k: int, initial_term: QubitTerm) -> TemplateVector:
    m0 = _initial_m(initial_term)
    coeffs = [ZERO, ZERO]
    for m in range(k + 1):
        total = m0 + m
        coeffs[total % 2] = coeffs[total % 2] + neg_i_power(total) * class_multiplicity(K, k, m)
    return TemplateVector(K, k, coeffs[0], coeffs[1], initial_m=m0)


def compute_template(algo: str, cfg: ModelConfig, k: int) -> TemplateVector:
    if algo == "bruteforce":
        return template_bruteforce(cfg, k)
    term = coarse_grain(cfg.initial_word, cfg.K)
    if algo == "recurrence":
        return template_recurrence(cfg.K, k, term)
    if algo == "closedform":
        return template_closedform(cfg.K, k, term)
    raise ValueError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}")


def normalize_template(T: TemplateVector) -> WaveFunction:
    """Scale by ``K**-k`` and convert to doubles.

    The result is not unit norm: its norm is ``((K^2+1)/K^2)**(k/2)``.
    """
    scale = T.K**T.level
    return WaveFunction(T.c0.to_complex(scale), T.c1.to_complex(scale))


def normalize_template_literal(T: TemplateVector, t: float) -> WaveFunction:
    """Scale by ``(K**-K)**t`` instead of ``K**-k``.

    Differs from :func:`normalize_template` by ``K**(k - t*K)`` whenever
    ``t*K`` is not an integer; kept only for comparison.
    """
    wf = normalize_template(T)
    factor = math.exp((T.level - t * T.K) * math.log(T.K))
    return WaveFunction(wf.c0 * factor, wf.c1 * factor)

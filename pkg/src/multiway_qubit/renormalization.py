"""Coarse-graining of words into qubit terms ``(-i)^m |m mod 2>``.

``m`` counts occurrences of the distinguished symbol a_K. Appending any
other symbol leaves the term alone; appending a_K multiplies by -i and
flips the basis bit. That gives the renormalized rule multiset: K identity
rules per basis state plus one ``-i``-weighted flip.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .gaussian import MINUS_I, ONE, GaussianInt, neg_i_power
from .multiway import Word

_UNITS = (GaussianInt(1, 0), GaussianInt(0, -1), GaussianInt(-1, 0), GaussianInt(0, 1))
_AMPLITUDE_PREFIX = {(1, 0): "", (0, -1): "-i", (-1, 0): "-", (0, 1): "i"}


@dataclass(frozen=True)
class QubitTerm:
    amplitude: GaussianInt
    basis: int

    def __post_init__(self) -> None:
        if self.amplitude not in _UNITS:
            raise ValueError(f"amplitude {self.amplitude} is not a unit of Z[i]")
        if self.basis not in (0, 1):
            raise ValueError(f"basis must be 0 or 1, got {self.basis}")

    def label(self) -> str:
        """``x`` for |0>, ``y`` for |1>, prefixed by the amplitude (``-iy``)."""
        a = self.amplitude
        return _AMPLITUDE_PREFIX[(a.re, a.im)] + ("y" if self.basis else "x")

    @classmethod
    def parse(cls, text: str) -> QubitTerm:
        basis = {"x": 0, "y": 1}.get(text[-1:])
        prefix = {v: k for k, v in _AMPLITUDE_PREFIX.items()}.get(text[:-1])
        if basis is None or prefix is None:
            raise ValueError(f"not a qubit term label: {text!r}")
        return cls(GaussianInt(*prefix), basis)

    def apply(self, rule: RenormalizedRule) -> QubitTerm:
        if rule.source_basis != self.basis:
            raise ValueError(f"rule {rule} does not act on basis {self.basis}")
        return QubitTerm(self.amplitude * rule.factor, rule.target_basis)


@dataclass(frozen=True)
class RenormalizedRule:
    source_basis: int
    target_basis: int
    factor: GaussianInt
    multiplicity: int

    def __str__(self) -> str:
        return f"|{self.source_basis}> -> {self.factor}|{self.target_basis}> x{self.multiplicity}"


def count_marked(w: Word, K: int) -> int:
    """Number of occurrences of a_K in ``w``."""
    return sum(1 for s in w.symbols if s == K)


def term_for_count(m: int) -> QubitTerm:
    return QubitTerm(neg_i_power(m), m % 2)


def coarse_grain(w: Word, K: int) -> QubitTerm:
    return term_for_count(count_marked(w, K))


def renormalized_ruleset(K: int) -> tuple[RenormalizedRule, ...]:
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    return (
        RenormalizedRule(0, 0, ONE, K),
        RenormalizedRule(1, 1, ONE, K),
        RenormalizedRule(0, 1, MINUS_I, 1),
        RenormalizedRule(1, 0, MINUS_I, 1),
    )


def apply_ruleset(term: QubitTerm, K: int) -> Counter[QubitTerm]:
    """Multiset of images of ``term`` under every applicable rule instance."""
    images: Counter[QubitTerm] = Counter()
    for rule in renormalized_ruleset(K):
        if rule.source_basis == term.basis:
            images[term.apply(rule)] += rule.multiplicity
    return images

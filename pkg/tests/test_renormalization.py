import itertools
from collections import Counter

import pytest

from multiway_qubit.gaussian import MINUS_I, ONE, GaussianInt
from multiway_qubit.multiway import ModelConfig, Word, successors
from multiway_qubit.renormalization import (
    QubitTerm,
    apply_ruleset,
    coarse_grain,
    count_marked,
    renormalized_ruleset,
    term_for_count,
)


@pytest.mark.parametrize("w, K, m", [((0, 1), 2, 0), ((0, 2, 2), 2, 2), ((1,), 1, 1)])
def test_count_marked(w, K, m):
    assert count_marked(Word(w), K) == m


@pytest.mark.parametrize(
    "w, amp, basis",
    [
        ((0, 1), GaussianInt(1, 0), 0),
        ((0, 2), GaussianInt(0, -1), 1),
        ((2, 2), GaussianInt(-1, 0), 0),
        ((2, 2, 2), GaussianInt(0, 1), 1),
    ],
)
def test_coarse_grain(w, amp, basis):
    assert coarse_grain(Word(w), 2) == QubitTerm(amp, basis)


def test_ruleset_K2():
    rules = renormalized_ruleset(2)
    as_tuples = {(r.source_basis, r.target_basis, r.factor, r.multiplicity) for r in rules}
    assert as_tuples == {(0, 0, ONE, 2), (1, 1, ONE, 2), (0, 1, MINUS_I, 1), (1, 0, MINUS_I, 1)}


@pytest.mark.parametrize("K", [1, 2, 5, 17])
def test_ruleset_multiplicities(K):
    rules = renormalized_ruleset(K)
    assert sum(r.multiplicity for r in rules) == 2 * K + 2
    for b in (0, 1):
        assert sum(r.multiplicity for r in rules if r.source_basis == b) == K + 1
    assert [r.multiplicity for r in rules if r.source_basis == r.target_basis == 0] == [K]


def test_term_invariants():
    for m in range(12):
        t = term_for_count(m)
        if t.basis == 0:
            assert t.amplitude in (1, -1)
        else:
            assert t.amplitude in (MINUS_I, GaussianInt(0, 1))
        assert term_for_count(m + 4) == t
    with pytest.raises(ValueError):
        QubitTerm(GaussianInt(1, 1), 0)
    with pytest.raises(ValueError):
        QubitTerm(ONE, 2)


def test_labels():
    labels = [QubitTerm(a, b).label() for b in (0, 1) for a in (term_for_count(0).amplitude, MINUS_I, GaussianInt(-1), GaussianInt(0, 1))]
    assert labels == ["x", "-ix", "-x", "ix", "y", "-iy", "-y", "iy"]
    for lab in labels:
        assert QubitTerm.parse(lab).label() == lab


def test_append_rules():
    K = 3
    w = Word((0, 3, 1))
    base = coarse_grain(w, K)
    for s in range(K):
        assert coarse_grain(w.append(s), K) == base
    flipped = coarse_grain(w.append(K), K)
    assert flipped == QubitTerm(base.amplitude * MINUS_I, 1 - base.basis)


@pytest.mark.parametrize("K", [1, 2, 3])
def test_commuting_square_small(K):
    cfg = ModelConfig(K)
    for length in range(1, 4):
        for symbols in itertools.product(range(K + 1), repeat=length):
            w = Word(symbols)
            images = Counter(coarse_grain(s, K) for s in successors(w, cfg))
            assert images == apply_ruleset(coarse_grain(w, K), K)

"""Append-rule multiway system over the alphabet a_0 ... a_K.

Every rule appends one symbol, so level ``k`` holds exactly ``(K+1)**k``
distinct words and no state deduplication is ever needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

DEFAULT_ENUMERATION_CAP = 10**7


class CapExceeded(RuntimeError):
    """Raised when a level would materialize more words than the cap allows."""

    def __init__(self, needed: int, cap: int, what: str = "level") -> None:
        shown = str(needed) if needed < 10**18 else f"about 2^{needed.bit_length() - 1}"
        super().__init__(
            f"{what} needs {shown} words but enumeration_cap is {cap}; "
            "use the closedform (or recurrence) template algorithm instead"
        )
        self.needed = needed
        self.cap = cap


@dataclass(frozen=True)
class Word:
    """A state of the multiway system, stored as symbol subindices."""

    symbols: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        if any(s < 0 for s in self.symbols):
            raise ValueError(f"negative symbol index in {self.symbols}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def append(self, index: int) -> Word:
        return Word(self.symbols + (index,))

    def label(self, K: int) -> str:
        """Subindex label: ``"002"`` when K <= 9, ``"0-10-3"`` otherwise."""
        if K <= 9:
            return "".join(str(s) for s in self.symbols)
        return "-".join(str(s) for s in self.symbols)

    @classmethod
    def parse(cls, text: str, K: int) -> Word:
        """Inverse of :meth:`label`; hyphens are always accepted."""
        text = text.strip()
        if not text:
            raise ValueError("empty word")
        if "-" in text:
            parts = text.split("-")
        elif K <= 9:
            parts = list(text)
        else:
            parts = [text]
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise ValueError(f"cannot parse word {text!r}") from exc


@dataclass(frozen=True)
class ModelConfig:
    K: int
    initial_word: Word = field(default_factory=lambda: Word((0,)))
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP

    def __post_init__(self) -> None:
        if not isinstance(self.initial_word, Word):
            object.__setattr__(self, "initial_word", Word(tuple(self.initial_word)))
        if self.K < 1:
            raise ValueError(f"K must be >= 1, got {self.K}")
        if len(self.initial_word) == 0:
            raise ValueError("initial_word must be nonempty")
        if self.enumeration_cap < 1:
            raise ValueError("enumeration_cap must be >= 1")
        self.check_word(self.initial_word)

    @property
    def alphabet_size(self) -> int:
        return self.K + 1

    def check_word(self, w: Word) -> None:
        for s in w.symbols:
            if not 0 <= s <= self.K:
                raise ValueError(f"symbol a_{s} is outside the alphabet a_0..a_{self.K}")

    def level_size(self, k: int) -> int:
        return self.alphabet_size**k

    def require_within_cap(self, count: int, what: str = "level") -> None:
        if count > self.enumeration_cap:
            raise CapExceeded(count, self.enumeration_cap, what)


@dataclass(frozen=True)
class MultiwayLevel:
    level: int
    words: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.words)


def successors(w: Word, cfg: ModelConfig) -> list[Word]:
    """Apply every rule to ``w``: one word per appended symbol, a_0 first."""
    cfg.check_word(w)
    return [w.append(i) for i in range(cfg.alphabet_size)]


def iter_suffixes(K: int, k: int) -> Iterator[tuple[int, ...]]:
    """All length-k suffixes in canonical (lexicographic) order."""
    return itertools.product(range(K + 1), repeat=k)


def enumerate_level(cfg: ModelConfig, k: int) -> MultiwayLevel:
    if k < 0:
        raise ValueError("level must be nonnegative")
    cfg.require_within_cap(cfg.level_size(k))
    prefix = cfg.initial_word.symbols
    words = tuple(Word(prefix + suffix) for suffix in iter_suffixes(cfg.K, k))
    return MultiwayLevel(k, words)


def level_edges(cfg: ModelConfig, k: int) -> list[tuple[Word, Word]]:
    """Edges from level ``k`` to level ``k+1``, grouped by parent in canonical order."""
    if k < 0:
        raise ValueError("level must be nonnegative")
    cfg.require_within_cap(cfg.level_size(k + 1), what="edge set")
    parents = enumerate_level(cfg, k).words
    return [(p, p.append(i)) for p in parents for i in range(cfg.alphabet_size)]


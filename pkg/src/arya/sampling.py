"""Skew-corrected language sampling for tokenizer draws and mini-batches.

Raw language proportions ``p_i = n_i / sum(n)`` are flattened with an
exponent ``alpha`` in [0, 1]:

    q_i = p_i**alpha / sum_j(p_j**alpha)

``alpha = 1`` keeps the raw distribution; ``alpha = 0`` is uniform over the
non-empty languages. One formula serves both call sites: tokenizer-training
draws (exponent 0.1 by default) and balanced mini-batch composition
(exponent 0.7 by default). A configured scaling parameter ``gamma`` is
accepted for provenance but enters no formula.

Determinism contract: all randomness comes from numpy's PCG64 bit generator
seeded with a 64-bit integer, consumed exclusively as ``random()`` doubles;
language picks use inverse-CDF over the cumulative ``q`` and item picks use
``floor(u * pool_size)``. Identical (inputs, seed) therefore reproduce
identical draws across runs and platforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator, Mapping, Sequence

import numpy as np

TOKENIZER_EXPONENT = 0.1
MINIBATCH_EXPONENT = 0.7


@dataclass(frozen=True)
class SamplingWeights:
    """Per-language raw proportions and adjusted probabilities."""

    languages: tuple[str, ...]
    counts: tuple[float, ...]
    p: tuple[float, ...]
    alpha: float
    q: tuple[float, ...]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.languages, self.q))

    def to_tsv(self) -> str:
        lines = ["language\tn\tp\tq"]
        for lang, n, p, q in zip(self.languages, self.counts, self.p, self.q):
            lines.append(f"{lang}\t{n:g}\t{p:.10f}\t{q:.10f}")
        return "\n".join(lines) + "\n"


def adjust(counts: Mapping[str, float], alpha: float) -> SamplingWeights:
    """Compute adjusted probabilities q from per-language counts.

    Languages with a zero count keep q = 0 (they stay out of the draw even
    at alpha = 0). Raises ValueError on an empty or all-zero count map, on
    negative counts, and on alpha outside [0, 1].
    """
    if not counts:
        raise ValueError("counts is empty")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    languages = tuple(counts.keys())
    n = np.asarray([counts[lang] for lang in languages], dtype=float)
    if np.any(n < 0):
        raise ValueError("counts must be >= 0")
    total = n.sum()
    if total == 0:
        raise ValueError("at least one count must be > 0")
    p = n / total
    # np.power(0, 0) is 1; zero-count languages must stay at q = 0.
    weighted = np.where(n > 0, np.power(p, alpha), 0.0)
    q = weighted / weighted.sum()
    return SamplingWeights(
        languages=languages,
        counts=tuple(float(x) for x in n),
        p=tuple(float(x) for x in p),
        alpha=float(alpha),
        q=tuple(float(x) for x in q),
    )


class WeightedSampler:
    """Seeded sampler over per-language pools with replacement.

    Owns its generator state and is not thread-safe; run independent
    instances with distinct seeds for parallel work.
    """

    def __init__(self, weights: SamplingWeights, pools: Mapping[str, Sequence[Any]], seed: int):
        for lang, q in zip(weights.languages, weights.q):
            if q > 0 and not pools.get(lang):
                raise ValueError(f"language {lang!r} has positive weight but an empty pool")
        self._languages = weights.languages
        self._pools = {lang: list(pools.get(lang, ())) for lang in weights.languages}
        self._cdf = np.cumsum(weights.q)
        self._rng = np.random.Generator(np.random.PCG64(seed))

    def pick_language(self) -> str:
        u = self._rng.random()
        idx = int(np.searchsorted(self._cdf, u, side="right"))
        idx = min(idx, len(self._languages) - 1)
        return self._languages[idx]

    def pick(self) -> Any:
        lang = self.pick_language()
        pool = self._pools[lang]
        return pool[int(self._rng.random() * len(pool))]

    def take(self, n: int) -> list[Any]:
        return [self.pick() for _ in range(n)]

    def state(self) -> dict:
        """Serializable generator state (resume support)."""
        return self._rng.bit_generator.state

    def set_state(self, state: dict) -> None:
        self._rng.bit_generator.state = state


def draw(
    weights: SamplingWeights,
    pools: Mapping[str, Sequence[Any]],
    n: int,
    seed: int,
) -> list[Any]:
    """Draw n items: language ~ q, then uniform with replacement in its pool."""
    return WeightedSampler(weights, pools, seed).take(n)


def compose_minibatches(
    datasets: Mapping[str, Sequence[Any]],
    s: float,
    batch_size: int,
    seed: int,
    *,
    sampler: WeightedSampler | None = None,
) -> Iterator[list[Any]]:
    """Yield an endless stream of size-``batch_size`` mini-batches.

    Languages are weighted by ``adjust(sizes, s)``; items are drawn with
    replacement. Pass a prepared ``sampler`` to resume an interrupted
    stream from saved generator state.
    """
    if batch_size < 1:
        raise ValueError("batch_size must be >= 1")
    sizes = {lang: len(examples) for lang, examples in datasets.items()}
    if sampler is None:
        weights = adjust(sizes, s)
        sampler = WeightedSampler(weights, datasets, seed)
    while True:
        yield sampler.take(batch_size)


def minibatch_sampler(
    datasets: Mapping[str, Sequence[Any]], s: float, seed: int
) -> WeightedSampler:
    """The sampler compose_minibatches would build; exposed for checkpointing."""
    sizes = {lang: len(examples) for lang, examples in datasets.items()}
    return WeightedSampler(adjust(sizes, s), datasets, seed)

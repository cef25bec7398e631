"""Deterministic parameter sampling for the verification suite.

Streams are built on the Philox 4x64 counter-based generator.  Each
(seed, entry id, sample index) triple gets an independent substream
whose 128-bit Philox key is the first 16 bytes (little-endian) of

    SHA-256(b"qsf|<seed>|<entry id>|<index>")

so excluding one entry can never shift another entry's draws, and the
derivation is reproducible from the formula alone.  Within a substream
every scalar consumes exactly one uniform draw in declaration order
(q first, then each declared parameter; vector parameters draw once
per element after their count parameter).
"""

from __future__ import annotations

import hashlib

import numpy as np

from .catalog import CatalogEntry, ParamSpec
from .errors import InvalidArgument

#: sampling window for q (narrower than the evaluation band on purpose)
SAMPLE_Q_MIN = 1e-4
SAMPLE_Q_MAX = 0.9995


def substream(seed: int, entry_id: str, index: int) -> np.random.Generator:
    """Independent Philox substream for one (entry, sample) pair."""
    raw = f"qsf|{seed}|{entry_id}|{index}".encode()
    key = int.from_bytes(hashlib.sha256(raw).digest()[:16], "little")
    return np.random.Generator(np.random.Philox(key=key))


def _draw_float(rng: np.random.Generator, spec: ParamSpec) -> float:
    u = rng.random()
    if spec.exclude is not None:
        w_lo, w_hi = spec.exclude
        left = w_lo - spec.lo
        total = left + (spec.hi - w_hi)
        t = u * total
        return spec.lo + t if t <= left else w_hi + (t - left)
    if spec.uses_log_scale():
        return spec.lo * np.exp(u * np.log(spec.hi / spec.lo))
    return spec.lo + u * (spec.hi - spec.lo)


def _draw_int(rng: np.random.Generator, spec: ParamSpec) -> int:
    lo, hi = int(spec.lo), int(spec.hi)
    return min(lo + int(rng.random() * (hi - lo + 1)), hi)


def sample_params(
    entry: CatalogEntry,
    rng: np.random.Generator,
    q_min: float = 0.05,
    q_max: float = 0.95,
    sample_degenerate_ints: bool = False,
) -> dict[str, float]:
    """Draw one parameter set for an entry (including q when used).

    Integer parameters whose declared range starts at a degenerate
    value (a note marks those) are sampled from 2 upward unless
    `sample_degenerate_ints` is set.
    """
    if not (SAMPLE_Q_MIN <= q_min < q_max <= SAMPLE_Q_MAX):
        raise InvalidArgument(
            f"q window [{q_min}, {q_max}] outside [{SAMPLE_Q_MIN}, {SAMPLE_Q_MAX}]"
        )
    params: dict[str, float] = {}
    if entry.uses_q:
        params["q"] = q_min + rng.random() * (q_max - q_min)
    for spec in entry.params:
        if spec.count_by is not None:
            count = int(params[spec.count_by])
            for i in range(1, count + 1):
                params[f"{spec.name}{i}"] = float(_draw_float(rng, spec))
            continue
        if spec.integer:
            lo = spec.lo
            if not sample_degenerate_ints and "degenerate" in spec.note:
                lo = max(spec.lo, 2)
            v = _draw_int(rng, ParamSpec(spec.name, lo, spec.hi, integer=True))
            params[spec.name] = float(v)
            continue
        if spec.fraction_of is not None:
            u = spec.lo + rng.random() * (spec.hi - spec.lo)
            params[spec.name] = float(u * params[spec.fraction_of])
            continue
        params[spec.name] = float(_draw_float(rng, spec))
    return params

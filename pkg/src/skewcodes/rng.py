"""Deterministic randomness: every random choice in the toolkit flows
from one 64-bit seed through a counter/label splitter, so each trial is
independently reproducible (replay a single failing case by index
without re-running its predecessors)."""

from __future__ import annotations

import random


def spawn(seed: int, *labels) -> random.Random:
    """Child generator for (seed, labels).  String seeding in
    random.Random is hash-randomization-free, so streams are stable
    across processes."""
    key = ":".join([str(seed)] + [str(x) for x in labels])
    return random.Random(key)

"""Decoder result value: a unique message, an affine list description,
or a flagged failure.  Failures are values, never exceptions."""

from __future__ import annotations

from dataclasses import dataclass, field

from .interpsolver import AffineRootSpace

UNIQUE = "unique"
LIST = "list"
FAILURE = "failure"


@dataclass
class DecodeOutcome:
    status: str                       # unique | list | failure
    message: list | None = None       # message polynomial vector when unique
    space: AffineRootSpace | None = None
    interp_count: int = 0             # number of interpolation vectors used
    timings: dict = field(default_factory=dict)

    @property
    def list_size(self) -> int:
        """delta + 1 (affine dimension plus one); 0 on failure."""
        if self.status == FAILURE:
            return 0
        return self.space.delta + 1

    def contains(self, f_vec) -> bool:
        if self.status == FAILURE:
            return False
        return self.space.contains(f_vec)

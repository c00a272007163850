from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of one exact check.

    ``holds`` is decided by exact arithmetic or exhaustive search only; the
    float spectra ride along for display.
    """

    claim: str
    holds: bool
    witness: dict[str, Any] = field(default_factory=dict)
    left_spectrum: tuple[float, ...] = ()
    right_spectrum: tuple[float, ...] = ()

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self, decimals: int | None = 4) -> dict[str, Any]:
        def fmt(xs):
            # adding 0.0 turns -0.0 into 0.0 for display
            return [round(x, decimals) + 0.0 if decimals is not None else x for x in xs]

        out: dict[str, Any] = {"claim": self.claim, "holds": self.holds, "witness": self.witness}
        if self.left_spectrum or self.right_spectrum:
            out["spectra"] = [fmt(self.left_spectrum), fmt(self.right_spectrum)]
        return out

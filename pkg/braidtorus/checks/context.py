import random
from dataclasses import dataclass

from braidtorus.braids import ArtinFactory, artin_presentation
from braidtorus.modes import DEFAULT_YB6_VARIANT, Yb6Variant
from braidtorus.presentations import Presentation

__all__ = ("CheckContext",)


@dataclass(frozen=True)
class CheckContext:
    """Inputs shared by all checks of a run.

    `artin` replaces the Artin presentation factory, so that a corrupted
    presentation can be fed through every check.
    """

    seed: int = 0
    variant: Yb6Variant = DEFAULT_YB6_VARIANT
    artin: ArtinFactory | None = None

    def artin_presentation(self, k: int) -> Presentation:
        if self.artin is not None:
            return self.artin(k)
        return artin_presentation(k, self.variant)

    def rng(self, salt: str = "") -> random.Random:
        """A generator seeded by the run seed and `salt`."""
        return random.Random(f"{self.seed}:{salt}")

"""Physical constants, selectable between SI and natural units."""

from __future__ import annotations

from dataclasses import dataclass

# 2019 SI defined values
SI_HBAR = 1.054571817e-34        # J s
SI_K_BOLTZMANN = 1.380649e-23    # J / K
SI_C_LIGHT = 2.99792458e8        # m / s


@dataclass(frozen=True)
class UnitSystem:
    """The constants hbar, k and c used by the radiation-law formulas."""

    hbar: float = 1.0
    k_boltzmann: float = 1.0
    c_light: float = 1.0
    mode: str = "natural"

    def __post_init__(self):
        for name in ("hbar", "k_boltzmann", "c_light"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.mode not in ("natural", "si"):
            raise ValueError(f"mode must be 'natural' or 'si', got {self.mode!r}")

    @classmethod
    def natural(cls) -> "UnitSystem":
        return cls()

    @classmethod
    def si(cls) -> "UnitSystem":
        return cls(SI_HBAR, SI_K_BOLTZMANN, SI_C_LIGHT, "si")


NATURAL = UnitSystem.natural()

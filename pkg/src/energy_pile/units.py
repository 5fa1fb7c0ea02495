"""Unit tokens accepted in spec files and their SI conversion factors."""

from dataclasses import dataclass

from .model import ValidationError

# token -> (factor to SI, dimension)
UNITS = {
    "m": (1.0, "length"),
    "mm": (1e-3, "length"),
    "Pa": (1.0, "pressure"),
    "kPa": (1e3, "pressure"),
    "MPa": (1e6, "pressure"),
    "GPa": (1e9, "pressure"),
    "Pa/m": (1.0, "stiffness"),
    "kPa/m": (1e3, "stiffness"),
    "MPa/m": (1e6, "stiffness"),
    "N": (1.0, "force"),
    "kN": (1e3, "force"),
    "MN": (1e6, "force"),
    "degC": (1.0, "temperature"),
    "1/degC": (1.0, "expansion"),
}


@dataclass(frozen=True)
class Quantity:
    """A magnitude exactly as written plus its unit token."""

    value: float
    unit: str

    def __post_init__(self):
        if self.unit not in UNITS:
            raise ValidationError(f"unknown unit token {self.unit!r}")

    @property
    def dimension(self) -> str:
        return UNITS[self.unit][1]

    @property
    def si(self) -> float:
        return self.value * UNITS[self.unit][0]

    def __str__(self):
        text = repr(self.value)
        if text.endswith(".0"):
            text = text[:-2]
        return f"{text} {self.unit}"


def parse_quantity(text: str) -> Quantity:
    """Parse ``"<number> <unit>"``, e.g. ``"16.7 MPa/m"``."""
    parts = text.split()
    if len(parts) != 2:
        raise ValidationError(f"expected '<number> <unit>', got {text!r}")
    number, unit = parts
    if unit not in UNITS:
        raise ValidationError(f"unknown unit token {unit!r} (supported: {', '.join(UNITS)})")
    try:
        value = float(number)
    except ValueError:
        raise ValidationError(f"not a number: {number!r}") from None
    return Quantity(value, unit)

"""Size caps and run-wide switches."""
from dataclasses import dataclass

DEFAULT_TABLE_CAP = 400
DEFAULT_LATTICE_CAP = 120
DEFAULT_ISO_CAP = 64
EXHAUSTIVE_ASSOC_MAX = 64


@dataclass(frozen=True)
class Settings:
    table_cap: int = DEFAULT_TABLE_CAP
    lattice_cap: int = DEFAULT_LATTICE_CAP
    iso_cap: int = DEFAULT_ISO_CAP
    seed: int = 0
    exhaustive_assoc: bool = False
    strict_cpo: bool = False

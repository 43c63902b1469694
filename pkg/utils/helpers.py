import enum
import math
from typing import Iterable, Sequence

import numpy as np


SIGNIFICANT_DIGITS = 12


class CaseInsensitiveEnum(str, enum.Enum):
    @classmethod
    def _missing_(cls, value: str):
        for member in cls:
            if member.lower() == value.lower():
                return member
        return None


def to_sig(value: float, digits: int = SIGNIFICANT_DIGITS) -> float:
    """Round to `digits` significant digits. Negative zero is folded into zero"""
    if not math.isfinite(value):
        return value

    rounded = float(f'{value:.{digits}g}')
    return rounded + 0.0


def round_floats(data, digits: int = SIGNIFICANT_DIGITS):
    """Walk dicts/lists/tuples and round every float in place of the original"""
    if isinstance(data, bool):
        return data
    if isinstance(data, float):
        return to_sig(data, digits)
    if isinstance(data, dict):
        return {k: round_floats(v, digits) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [round_floats(v, digits) for v in data]
    return data


def max_norm(values: Sequence[float] | np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(values, dtype=float))))


def parse_grid(spec: str) -> np.ndarray:
    """'start:stop:num' -> evenly spaced points, both ends included"""
    parts = spec.split(':')
    if len(parts) != 3:
        raise ValueError(f"grid spec must look like 'start:stop:num', got {spec!r}")

    start, stop, num = float(parts[0]), float(parts[1]), int(parts[2])
    if num < 1:
        raise ValueError(f'grid needs at least one point, got {num}')

    return np.linspace(start, stop, num)


def parse_grid_pair(spec: str) -> tuple[np.ndarray, np.ndarray]:
    """One grid for both axes, or two comma separated grids (loc_a first)"""
    specs: Iterable[str] = [x.strip() for x in spec.split(',')]
    grids = [parse_grid(x) for x in specs]

    if len(grids) == 1:
        return grids[0], grids[0]
    if len(grids) == 2:
        return grids[0], grids[1]

    raise ValueError(f'expected one or two grid specs, got {len(grids)}')

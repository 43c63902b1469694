from typing import Callable

from errors import InvalidStep


def derivative(func: Callable[[float], float], x: float, step: float, lower: float = 0.0) -> float:
    """Centered differences inside the domain; a second order forward stencil
    when x sits exactly on the lower bound"""
    if step <= 0:
        raise InvalidStep(f'step must be positive, got {step}')

    if x == lower:
        return (-3 * func(x) + 4 * func(x + step) - func(x + 2 * step)) / (2 * step)

    if x - step < lower:
        raise InvalidStep(f'step {step} crosses the lower bound {lower} from x = {x}')

    return (func(x + step) - func(x - step)) / (2 * step)

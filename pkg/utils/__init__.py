from .helpers import CaseInsensitiveEnum, to_sig, round_floats, max_norm, parse_grid, \
    parse_grid_pair, SIGNIFICANT_DIGITS
from .fixed_point import iterate_to_fixed_point, MAX_ITERATIONS, TOLERANCE
from .golden_section import bracket_minimum, golden_section_search
from .finite_difference import derivative

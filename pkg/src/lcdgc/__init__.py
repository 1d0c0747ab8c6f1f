"""Binary LCD group codes: construction, classification and counting."""

from .algebra import AlgebraElement, adjoint, inner_product, is_lcd_idempotent, to_vector
from .codes import (
    CapacityError,
    GroupCode,
    build_code,
    dual_idempotent,
    enumerate_lcd_codes,
    is_lcd_gram,
    is_lcd_intersection,
    mds_report,
    min_distance,
    power_of_two_length_check,
    structural_parameters,
)
from .cyclotomic import (
    CosetPartition,
    cosets,
    count_lcd_cyclic,
    paper_general_formula_audit,
    power_of_two_plus_one_divisor,
)
from .gf2 import BitMatrix
from .groups import FiniteGroup, Subset, make_group

__version__ = "0.1.0"

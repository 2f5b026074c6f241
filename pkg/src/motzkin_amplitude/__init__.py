"""Exact enumeration of Motzkin paths by height and amplitude."""

from .explicit import class_coeff_explicit, height_coeff_explicit, kernel_coeff
from .genfunc import (
    class_coeff_series,
    det_poly,
    det_star_poly,
    series_bounded,
    series_bounded_no_horiz,
)
from .numerics import (
    PolynomialZ,
    TrinomialRow,
    TruncatedSeries,
    motzkin_number,
    poly_mul,
    series_div,
    trinomial,
    trinomial_row,
)
from .paths import (
    ClassCount,
    MotzkinPath,
    PathProfile,
    Step,
    class_count_oracle,
    dp_count_bounded,
    dp_count_bounded_no_horiz,
    enumerate_all,
    profile,
)
from .statistics import (
    AmplitudeDistribution,
    AsymptoticReport,
    Quantity,
    amplitude_distribution,
    asymptotic_mean_amplitude,
    asymptotic_report,
    horizontal_fraction,
    mean_amplitude,
    mean_height,
)

__version__ = "0.1.0"

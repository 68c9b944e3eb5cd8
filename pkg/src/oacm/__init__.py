"""Cat-map image scrambling over overlapping square partitions.

The pipeline: tile the image with overlapping squares, run the cat map
once on every square to get a single permutation of the pixel indices,
decompose that permutation into orbits, and then any number of
iterations (even astronomically many) is a single sweep over the pixels.
Exact periods, orbit histograms, similarity curves and the Landau-function
period bound are computed from the same decomposition.
"""

from .acm import (
    AcmParams,
    Mat2,
    Point,
    acm_inverse_map,
    acm_map,
    inverse_map_matrix,
    map_matrix,
    mat_power_mod,
    matrix_period,
)
from .analysis import (
    OrbitHistogram,
    SimilarityCurve,
    orbit_histogram,
    recurrence_peaks,
    similarity_at,
    similarity_curve,
    write_histogram_csv,
    write_similarity_csv,
)
from .bigfmt import mantissa_exponent, scientific
from .errors import (
    ImageFormatError,
    MalformedHeaderError,
    OacmError,
    ParameterError,
    PeriodSearchError,
    TruncatedDataError,
    UnsupportedFormatError,
)
from .images import (
    KeyConfig,
    RasterImage,
    descramble,
    permutation_for,
    read_image,
    scramble,
    shift_pixels,
    write_image,
)
from .landau import (
    DEFAULT_CEILING,
    LandauResult,
    landau_g,
    landau_g_bruteforce,
    period_bound_for_image,
)
from .permutation import (
    CycleDecomposition,
    Permutation,
    apply_iterations,
    build_oacm_permutation,
    compose,
    cycle_decompose,
    image_period,
    invert,
)
from .tiling import Tiling, TilingParams, square_count, square_locations

__all__ = [
    "AcmParams",
    "CycleDecomposition",
    "DEFAULT_CEILING",
    "ImageFormatError",
    "KeyConfig",
    "LandauResult",
    "MalformedHeaderError",
    "Mat2",
    "OacmError",
    "OrbitHistogram",
    "ParameterError",
    "PeriodSearchError",
    "Permutation",
    "Point",
    "RasterImage",
    "SimilarityCurve",
    "Tiling",
    "TilingParams",
    "TruncatedDataError",
    "UnsupportedFormatError",
    "acm_inverse_map",
    "acm_map",
    "apply_iterations",
    "build_oacm_permutation",
    "compose",
    "cycle_decompose",
    "descramble",
    "image_period",
    "inverse_map_matrix",
    "invert",
    "landau_g",
    "landau_g_bruteforce",
    "mantissa_exponent",
    "map_matrix",
    "mat_power_mod",
    "matrix_period",
    "orbit_histogram",
    "period_bound_for_image",
    "permutation_for",
    "read_image",
    "recurrence_peaks",
    "scientific",
    "scramble",
    "shift_pixels",
    "similarity_at",
    "similarity_curve",
    "square_count",
    "square_locations",
    "write_histogram_csv",
    "write_image",
    "write_similarity_csv",
]

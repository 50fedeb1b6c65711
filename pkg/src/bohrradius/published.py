"""Published reference values, kept verbatim as printed (3-5 significant digits).

Each dataset carries a short provenance string so that table diffs explain
themselves.  Nothing here is computed.
"""
from __future__ import annotations

import math

TABLE_M = (0.431, 0.862, 1.210, 1.271, 1.289, 1.292, 1.2935, 1.29421, 1.29433)

# rows keyed by the weight exponent; PH0 class with phi_n = n^k r^n
TABLE_1 = {
    1: (0.443, 0.230, 0.057, 0.017, 0.0040, 0.0018, 0.00065, 0.00010, 0.000015),
    2: (0.358, 0.189, 0.029, 0.016, 0.0040, 0.0017, 0.00065, 0.00010, 0.000015),
    3: (0.277, 0.149, 0.044, 0.015, 0.0039, 0.0017, 0.00065, 0.00010, 0.000015),
}

# PH0 class with phi_n = (n+1)^k r^n
TABLE_2 = {
    1: (0.404, 0.208, 0.054, 0.016, 0.0040, 0.0018, 0.00065, 0.00010, 0.000015),
    2: (0.284, 0.147, 0.043, 0.015, 0.0039, 0.0017, 0.00065, 0.00010, 0.000015),
    3: (0.203, 0.147, 0.043, 0.015, 0.0039, 0.0017, 0.00065, 0.00010, 0.000015),
}

TABLES = {
    1: {"family": "poly", "rows": TABLE_1,
        "provenance": "printed table of R_k(M), weights n^k r^n, k = 1, 2, 3"},
    2: {"family": "shift", "rows": TABLE_2,
        "provenance": "printed table of R*_k(M), weights (n+1)^k r^n, k = 1, 2, 3"},
}

TABLE_TOLERANCE = 0.002

# Bohr radii of the W0_H(alpha) class with phi_n = r^n
WH0_RADIUS_ALPHA0 = 0.285194
WH0_RADIUS_ALPHA1 = 0.58387765

ADMISSIBLE_M_PRINTED = 1.29435
LIMIT_ROOT_PRINTED = 0.000015

SQRT17 = math.sqrt(17.0)
R_SHARP = (SQRT17 - 3.0) / 4.0
LAMBDA_SHARP = (221.0 - 43.0 * SQRT17) / 64.0

# radii of earlier Bohr-type inequalities, kept for reference only
REFERENCE_CONSTANTS = {
    "subordination_radius": 3.0 - math.sqrt(8.0),
    "rogosinski_f_plus_b1": math.sqrt(5.0) - 2.0,
    "rogosinski_f2_plus_b1": 1.0 / 3.0,
    "quartic_root_1_2r_r2_r3_r4": 0.385795,
    "lambda_16_9": 16.0 / 9.0,
    "lambda_9_8": 9.0 / 8.0,
    "lambda_8_9": 8.0 / 9.0,
}

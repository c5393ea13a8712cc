"""Exact radical/pi expressions for the asymptotic series coefficients.

Everything is evaluated once in double precision from the exact forms; the
printed decimals in documentation and tests act as checksums only.
"""

import math

SQRT114 = math.sqrt(114.0)
_PI = math.pi

#: leading coefficient of the optimal opening angle, a = 0.652461...
A_COEF = (2.0 * SQRT114 - 7.0) / 22.0

#: second-order coefficient, b = 0.389733...
B_COEF = (3521.0 * SQRT114 - 34010.0) / 9196.0

#: third-order coefficient (enters with a minus sign), c = 1.631188...
C_COEF = (
    17328.0 * (663157.0 + 3161.0 * _PI**2)
    - (1088031703.0 - 3918085.0 * _PI**2) * SQRT114
) / 507398496.0


def t_coefficient(n: int) -> float:
    """Second-order coefficient of the Mossinghoff opening angle.

    0.429901... for n = 2 mod 4, 0.589862... for n = 0 mod 4.
    """
    sign = -1.0 if n % 4 == 2 else 1.0
    return (103104.0 * SQRT114 - 998743.0) / 200255.0 + sign * (
        15.0 * _PI * (347.0 * SQRT114 - 714.0) / 1762244.0
    )


def d_coefficient(n: int) -> float:
    """Limit of the scaled fifth-order gap to the Mossinghoff polygon.

    0.0836582354... for n = 2 mod 4, 0.1180393778... for n = 0 mod 4.
    """
    sign = -1.0 if n % 4 == 2 else 1.0
    return (
        25.0 * _PI**2 * (1747646.0 - 22523.0 * SQRT114) / 4691093528.0
        + (32717202988.0 - 3004706459.0 * SQRT114) / 29464719680.0
        + sign * 15.0 * _PI * (10124777.0 - 919131.0 * SQRT114) / 852926096.0
    )


#: limit of n^3 * (upper bound - best one-variable area)
K1 = (5303.0 - 456.0 * SQRT114) * _PI**3 / 5808.0

#: cruder classical bound on the same limit
K1_CRUDE = 3.0 * _PI**3 / 40.0

#: limit of the scaled quadratic penalty for perturbed opening angles
PENALTY_COEF = _PI**3 * SQRT114 / 8.0

#: limit of n^2 * (upper bound - regular area)
REGULAR_GAP_COEF = _PI**3 / 16.0

#: limit of n^3 * (upper bound - augmented-regular area)
REGULAR_PLUS_GAP_COEF = 5.0 * _PI**3 / 48.0

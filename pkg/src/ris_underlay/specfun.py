"""Special functions needed by the closed-form secrecy/outage expressions.

Everything here is scalar, pure and thread-safe.  The three building blocks
are the upper incomplete gamma function at zero order, the Whittaker W
function on the half-integer parameter lattice produced by the closed forms,
and the error function together with a four-term exponential-sum
approximation of it used by the secondary-network outage algebra.
"""

import math
from dataclasses import dataclass, field

from scipy.special import erf as _erf
from scipy.special import erfc as _erfc
from scipy.special import expn as _expn

from .errors import DomainError, PoleError, UnsupportedParametersError

_EULER_GAMMA = 0.5772156649015328606


# ---------------------------------------------------------------------------
# continued-fraction helper (modified Lentz)
# ---------------------------------------------------------------------------

def _lentz(coeffs, max_iter=500, tol=1e-16):
    """Evaluate b0 + K(a_i/b_i) with modified Lentz; ``coeffs(i) -> (a_i, b_i)``."""
    tiny = 1e-300
    b0 = coeffs(0)[1]
    f = b0 if b0 != 0.0 else tiny
    c = f
    d = 0.0
    for i in range(1, max_iter):
        a, b = coeffs(i)
        d = b + a * d
        if d == 0.0:
            d = tiny
        c = b + a / c
        if c == 0.0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < tol:
            return f
    return f


# ---------------------------------------------------------------------------
# upper incomplete gamma at order zero
# ---------------------------------------------------------------------------

def exp_scaled_upper_gamma_zero(x: float) -> float:
    """e^x * Gamma(0, x) for x > 0, without overflow for large x.

    Series below x = 1, continued fraction at and above; the scaled form is
    what the secrecy closed forms actually consume, since Gamma(0, x) always
    appears multiplied by a growing exponential there.
    """
    if x <= 0.0:
        if x == 0.0:
            raise PoleError("Gamma(0, x) has a logarithmic pole at x = 0")
        raise DomainError(f"Gamma(0, x) requires x > 0, got {x!r}")
    if x < 1.0:
        # E1(x) = -euler_gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
        s = 0.0
        term = 1.0
        for k in range(1, 50):
            term *= -x / k
            s -= term / k
            if abs(term) < 1e-18:
                break
        return math.exp(x) * (-_EULER_GAMMA - math.log(x) + s)

    # Gamma(0,x) = e^-x / (x + 1/(1 + 1/(x + 2/(1 + 2/(x + ...)))))
    def coeffs(i):
        if i == 0:
            return 0.0, x
        if i % 2 == 1:
            return ((i + 1) // 2, 1.0)
        return (i // 2, x)

    return 1.0 / _lentz(coeffs)


def upper_gamma_zero(x: float) -> float:
    """Gamma(0, x) = integral_x^inf t^-1 e^-t dt for x > 0."""
    return math.exp(-x) * exp_scaled_upper_gamma_zero(x)


# ---------------------------------------------------------------------------
# generalized exponential integral, exp-scaled
# ---------------------------------------------------------------------------

def _scaled_expn(m: int, z: float) -> float:
    """e^z * E_m(z) for integer m >= 1, z > 0, stable for all z."""
    if z <= 30.0:
        return math.exp(z) * _expn(m, z)

    # E_m(z) = e^-z / (z + m/(1 + 1/(z + (m+1)/(1 + 2/(z + ...)))))
    def coeffs(i):
        if i == 0:
            return 0.0, z
        if i % 2 == 1:
            return (m + (i - 1) // 2, 1.0)
        return (i // 2, z)

    return 1.0 / _lentz(coeffs)


# ---------------------------------------------------------------------------
# confluent hypergeometric U on the integer lattice
# ---------------------------------------------------------------------------

def hyperu_int(p: int, q: int, z: float) -> float:
    """Kummer U(p, q, z) for integer p >= 1, integer q <= p + 1, z > 0.

    Method: q >= 2 is mapped down with U(a,b,z) = z^(1-b) U(a-b+1, 2-b, z);
    for q <= 1 the three-term recurrence in the first parameter is run
    backward (Miller's algorithm) and normalized against
    U(1, q, z) = e^z E_{2-q}(z).  The recurrence start index grows like
    (4 + 10/sqrt(z))^2 so that the two solution branches stay separated by
    >= 1e16 even for small z, where they are only algebraically distinct.
    """
    if z <= 0.0:
        raise DomainError(f"U(p, q, z) requires z > 0, got {z!r}")
    if p < 1:
        raise UnsupportedParametersError(f"U lattice needs integer p >= 1, got {p}")
    if q > p + 1:
        raise UnsupportedParametersError(f"U lattice needs q <= p + 1, got (p={p}, q={q})")
    if q == p + 1:
        return z ** (-p)
    if q >= 2:
        return z ** (1 - q) * hyperu_int(p - q + 1, 2 - q, z)

    pad = min(int(math.ceil((4.0 + 10.0 / math.sqrt(z)) ** 2)), 500_000)
    start = p + pad
    u_next = 0.0
    u_cur = 1.0
    u_p = 1.0 if p == start else None
    for a in range(start, 1, -1):
        u_prev = (2 * a - q + z) * u_cur - a * (a - q + 1) * u_next
        u_next, u_cur = u_cur, u_prev
        if a - 1 == p:
            u_p = u_cur
        if abs(u_cur) > 1e260:
            u_next *= 1e-260
            u_cur *= 1e-260
            if u_p is not None:
                u_p *= 1e-260
    return u_p * (_scaled_expn(2 - q, z) / u_cur)


# ---------------------------------------------------------------------------
# Whittaker W on the half-integer lattice
# ---------------------------------------------------------------------------

def _resolve_whittaker_lattice(a: float, b: float):
    """Map (a, b) to integer U parameters (p, q), trying both signs of b.

    Supported pairs satisfy q = 2b + 1 integer and p = q/2 - a a positive
    integer with q <= p + 1; these are exactly the half-integer-spaced
    parameters the closed forms generate for antenna counts up to 8.
    """
    for bb in (b, -b):
        q2 = 2.0 * bb + 1.0
        p2 = q2 / 2.0 - a
        q = round(q2)
        p = round(p2)
        if abs(q2 - q) > 1e-9 or abs(p2 - p) > 1e-9:
            continue
        if p >= 1 and q <= p + 1:
            return p, q, bb
    raise UnsupportedParametersError(
        f"Whittaker parameters (a={a!r}, b={b!r}) are outside the supported "
        "half-integer lattice"
    )


def whittaker_w_scaled(a: float, b: float, z: float) -> float:
    """e^(z/2) * W_{a,b}(z) = z^(b'+1/2) U(b'-a+1/2, 1+2b', z), b' = +-b.

    The exp-scaled form is what the closed forms consume; it never
    overflows on the supported lattice.
    """
    if z <= 0.0:
        raise DomainError(f"W_(a,b)(z) requires z > 0, got {z!r}")
    p, q, bb = _resolve_whittaker_lattice(a, b)
    return z ** (bb + 0.5) * hyperu_int(p, q, z)


def whittaker_w(a: float, b: float, z: float) -> float:
    """Whittaker W_{a,b}(z) on the supported half-integer lattice, z > 0."""
    return math.exp(-z / 2.0) * whittaker_w_scaled(a, b, z)


# ---------------------------------------------------------------------------
# error function, exact and exponential-sum approximation
# ---------------------------------------------------------------------------

def erf_exact(x: float) -> float:
    """erf(x) at double precision."""
    return float(_erf(x))


def erfc_exact(x: float) -> float:
    """erfc(x) = 1 - erf(x), evaluated without cancellation."""
    return float(_erfc(x))


@dataclass(frozen=True)
class ErfApproxCoeffs:
    """Coefficients of the four-term exponential-sum erf approximation.

    erf(x) ~ sign(x) * (1 - sum_m upsilon_m exp(-theta_m x^2)).
    """

    theta: tuple = (1.0, 2.0, 20.0 / 3.0, 20.0 / 17.0)
    upsilon: tuple = (1.0 / 8.0, 1.0 / 4.0, 1.0 / 4.0, 1.0 / 4.0)

    def __post_init__(self):
        if len(self.theta) != 4 or len(self.upsilon) != 4:
            raise DomainError("erf approximation uses exactly 4 coefficient pairs")
        if any(t <= 0 for t in self.theta) or any(u <= 0 for u in self.upsilon):
            raise DomainError("erf approximation coefficients must be positive")


DEFAULT_ERF_APPROX_COEFFS = ErfApproxCoeffs()


def erf_approx(x: float, coeffs: ErfApproxCoeffs = DEFAULT_ERF_APPROX_COEFFS) -> float:
    """Exponential-sum approximation of erf; odd by construction.

    The x >= 0 branch applies at exactly x = 0, where the value is
    1 - sum(upsilon) = 1/8; the approximation is loose near the origin and
    tightens rapidly away from it.
    """
    x2 = x * x
    s = sum(u * math.exp(-t * x2) for u, t in zip(coeffs.upsilon, coeffs.theta))
    mag = 1.0 - s
    return mag if x >= 0 else -mag

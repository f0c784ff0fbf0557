"""Adaptive quadrature on [0, inf) via an exponential transform to (0, 1].

The oracles integrate smooth, exponentially decaying densities; substituting
x = -scale * ln(u) maps the half line onto (0, 1] and makes the dominant
decay scale explicit, after which an adaptive Gauss-Kronrod rule converges
quickly.
"""

import math

from scipy.integrate import quad

from .errors import QuadratureError


def integrate_zero_inf(f, *, scale=1.0, epsabs=1e-10, epsrel=1e-10, limit=200):
    """Integrate f over [0, inf) to the requested absolute tolerance.

    ``scale`` should match the slowest exponential decay rate of ``f``.
    Raises QuadratureError (carrying the achieved error estimate) when the
    integrator does not converge.
    """

    def transformed(u):
        x = -scale * math.log(u)
        return f(x) * scale / u

    value, abserr, info, *rest = quad(
        transformed, 0.0, 1.0, epsabs=epsabs, epsrel=epsrel, limit=limit,
        full_output=True,
    )
    if rest:  # ier != 0 message present
        raise QuadratureError(
            f"quadrature did not converge: {rest[0]}", achieved=abserr
        )
    if abserr > max(epsabs, abs(value) * epsrel) * 10.0:
        raise QuadratureError(
            f"quadrature error estimate {abserr:.3e} exceeds tolerance", achieved=abserr
        )
    return value

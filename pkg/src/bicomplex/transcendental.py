"""Exponential, logarithm branches, square root, and trigonometric form.

All functions act componentwise over the idempotent basis: for
``w = p1*e1 + p2*e2`` and a complex function f, the bicomplex extension
is ``f(p1)*e1 + f(p2)*e2``. For exp this reproduces the Euler-style
closed form ``exp(z1) * (cos(z2) + i2*sin(z2))``, which the test suite
checks as an identity rather than using as the computation route.

The exponential is periodic: exp(w + d) == exp(w) exactly when both
idempotent components of d are integer multiples of 2*pi*i1. The
sublattice generated by 2*pi*i1 and 2*pi*i2 (components shifted by equal
and opposite multiples) indexes the logarithm branches exposed here; the
full period lattice is twice as fine, which is why
:func:`exp_lattice_coords` reports componentwise coordinates.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import NamedTuple

from .core import (
    SINGULARITY_TOLERANCE,
    Bicomplex,
    NonFiniteError,
    SingularOperand,
)

__all__ = [
    "BranchIndex",
    "TrigForm",
    "exp",
    "sqrt",
    "trig_form",
    "log_principal",
    "log_principal_direct",
    "log_branch",
    "log1p",
    "exp_lattice_coords",
]

TWO_PI = 2.0 * cmath.pi

# log1p switches from the power series to the closed form at this norm.
_SERIES_RADIUS = 0.25
_SERIES_STOP = 1e-17
_SERIES_MAX_TERMS = 64


class BranchIndex(NamedTuple):
    """Branch of the logarithm: the principal value shifted by
    ``2*pi*(m*i1 + n*i2)``."""

    m: int
    n: int


@dataclass(frozen=True)
class TrigForm:
    """Polar-style decomposition ``w = r_c * (cos(theta) + i2*sin(theta))``.

    r_c      -- principal complex square root of cn(w) (nonnegative real
                part; on the cut, nonnegative imaginary part)
    theta_c0 -- complex angle, normalized so its real part lies in
                (-pi, pi]
    """

    r_c: complex
    theta_c0: complex

    def reconstruct(self) -> Bicomplex:
        """Rebuild the value via the idempotent route
        ``r_c * exp(i2 * theta)``."""
        t = 1j * self.theta_c0
        return Bicomplex.from_idempotent(
            self.r_c * cmath.exp(-t), self.r_c * cmath.exp(t)
        )


def exp(w: Bicomplex) -> Bicomplex:
    """Bicomplex exponential, computed componentwise.

    Never lands on the null cone (both components of the result are
    nonzero). Raises NonFiniteError on overflow.
    """
    try:
        r1 = cmath.exp(w.z1 - 1j * w.z2)
        r2 = cmath.exp(w.z1 + 1j * w.z2)
    except OverflowError as err:
        raise NonFiniteError(f"exp overflow: {err}") from None
    return Bicomplex.from_idempotent(r1, r2)


def sqrt(w: Bicomplex, tol: float = SINGULARITY_TOLERANCE) -> Bicomplex:
    """Principal square root, componentwise.

    Restricted to invertible values so the principal choice is stable;
    raises SingularOperand on the null cone.
    """
    if w.is_singular(tol).is_singular:
        raise SingularOperand("square root requires an invertible value")
    pair = w.idempotent()
    return Bicomplex.from_idempotent(cmath.sqrt(pair.p1), cmath.sqrt(pair.p2))


def trig_form(w: Bicomplex, tol: float = SINGULARITY_TOLERANCE) -> TrigForm:
    """Complex modulus and argument of an invertible value.

    The modulus is the principal square root of cn(w); the angle is
    recovered from the second idempotent component, ``p2 = r_c *
    exp(i1*theta)``, so that reconstruct() is exact up to rounding.
    """
    if w.is_singular(tol).is_singular:
        raise SingularOperand("trigonometric form requires an invertible value")
    r_c = cmath.sqrt(w.cn())
    theta = -1j * cmath.log(w.p2 / r_c)
    return TrigForm(r_c=r_c, theta_c0=theta)


def log_principal(w: Bicomplex, tol: float = SINGULARITY_TOLERANCE) -> Bicomplex:
    """Principal logarithm: componentwise principal complex log.

    Inverse of exp up to the period lattice; raises SingularOperand on
    the null cone, where no logarithm exists.
    """
    if w.is_singular(tol).is_singular:
        raise SingularOperand("logarithm requires an invertible value")
    return Bicomplex.from_idempotent(
        cmath.log(w.z1 - 1j * w.z2), cmath.log(w.z1 + 1j * w.z2)
    )


def log_principal_direct(w: Bicomplex, tol: float = SINGULARITY_TOLERANCE) -> Bicomplex:
    """Cross-check route for the principal log via modulus and argument.

    Returns ``log(r_c) + i2*theta_c0`` from :func:`trig_form`. Always a
    valid logarithm (exp of the result reproduces ``w``), but it agrees
    with :func:`log_principal` only when the principal arguments of the
    two idempotent components sum to a value in (-pi, pi]; outside that
    set the two routes differ by a half-period of exp (an odd multiple
    of pi*i1 plus/minus pi*i2). :func:`log_principal` is the canonical
    branch; this exists for validation.
    """
    form = trig_form(w, tol)
    return Bicomplex(cmath.log(form.r_c), form.theta_c0)


def log_branch(
    w: Bicomplex,
    branch: BranchIndex | tuple[int, int] = (0, 0),
    tol: float = SINGULARITY_TOLERANCE,
) -> Bicomplex:
    """Logarithm on the (m, n) branch: principal value plus
    ``2*pi*(m*i1 + n*i2)``."""
    m, n = branch
    base = log_principal(w, tol)
    return Bicomplex(base.z1 + complex(0.0, TWO_PI * m), base.z2 + TWO_PI * n)


def log1p(w: Bicomplex) -> Bicomplex:
    """``log(1 + w)`` on the branch that agrees with the power series.

    For small ``w`` (Euclidean norm below 0.25) the alternating series
    ``w - w**2/2 + w**3/3 - ...`` is summed componentwise, preserving
    relative accuracy when ``1 + w`` would round away low bits. Beyond
    that radius this equals log_principal(1 + w), which is used
    directly; SingularOperand propagates when 1 + w is a zero divisor.
    """
    if abs(w) < _SERIES_RADIUS:
        u1 = w.z1 - 1j * w.z2
        u2 = w.z1 + 1j * w.z2
        acc1 = t1 = u1
        acc2 = t2 = u2
        sign = -1.0
        for k in range(2, _SERIES_MAX_TERMS + 1):
            t1 *= u1
            t2 *= u2
            acc1 += sign * t1 / k
            acc2 += sign * t2 / k
            sign = -sign
            if (abs(t1) ** 2 + abs(t2) ** 2) <= (
                _SERIES_STOP * _SERIES_STOP * (abs(acc1) ** 2 + abs(acc2) ** 2)
            ):
                break
        return Bicomplex.from_idempotent(acc1, acc2)
    return log_principal(Bicomplex(w.z1 + 1.0, w.z2))


def exp_lattice_coords(d: Bicomplex) -> tuple[complex, complex]:
    """Coordinates of ``d`` over the period lattice of exp.

    The exponential is invariant under shifting either idempotent
    component by 2*pi*i1 independently, so a difference of two
    logarithms of the same value has componentwise coordinates
    ``(p1/(2*pi*i1), p2/(2*pi*i1))`` that are (numerically) real
    integers. Integer pairs of equal parity correspond to the
    ``2*pi*(m*i1 + n*i2)`` sublattice with ``m = (a+b)/2, n = (b-a)/2``.
    """
    pair = d.idempotent()
    scale = complex(0.0, TWO_PI)
    return (pair.p1 / scale, pair.p2 / scale)

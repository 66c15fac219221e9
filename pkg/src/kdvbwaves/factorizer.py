"""Operator factorization of the reduced travelling-wave ODE.

The once-integrated travelling-wave ODE has the generic form

    w'' - w' + F(w) = 0,        F(w) = p*w - w^2 - q*w^3 - k,

(after moving the integration constant k into F).  Writing the second-order
operator as a product of first-order factors,

    [D - f2(U)] [D - f1(U)] U = 0,        D = d/dtheta,

and expanding, the factorization is consistent with the ODE if and only if

    f1(U) * f2(U) = F(U) / U              (product condition)
    f2(U) + d(f1(U)*U)/dU = 1             (closure condition)

Any solution of the compatible first-order equation U' = f1(U)*U then solves
the full second-order ODE.  Two ansaetze close these conditions:

* KdVB case (q = 0), after a displacement w = U + delta:
      f1 = A*sqrt(U) + B,  f2 = (1 - B) - (3/2)*A*sqrt(U)
  forces A^2 = 2/3, B = 2/5, and the velocity constraint p = 2*delta + 6/25.
  The compatible equation is then a Bernoulli equation.

* compound case (q != 0), with no displacement:
      f1*U = A*U^2 + B*U + C,  f2 = -2*A*U + (1 - B)
  forces A^2 = q/2, B = (A+1)/(3A), C free up to the velocity, and pins the
  integration constant k = C*(1-2A)/(3A).  The compatible equation is a
  Riccati equation.

Both branches of each square root are carried as explicit sign tags; no
implicit sign conventions.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import ParameterDomainError, UnsupportedDomainError
from .params import ReducedParams


class Sign(enum.Enum):
    """Explicit branch tag for square-root choices."""

    PLUS = "plus"
    MINUS = "minus"

    @property
    def factor(self) -> float:
        return 1.0 if self is Sign.PLUS else -1.0


@dataclass(frozen=True)
class KdvbFactorization:
    """Factorization data for the displaced KdVB travelling-wave ODE.

    Satisfies A^2 = 2/3, B = 2/5, p = 2*delta + 6/25, k = p*delta - delta^2.
    The compatible first-order equation is the Bernoulli equation
    U' = A*U^(3/2) + B*U.
    """

    A: float
    B: float
    delta: float
    p: float
    k: float
    sign: Sign

    def f1_at(self, U: complex) -> complex:
        return self.A * cmath.sqrt(U) + self.B

    def f2_at(self, U: complex) -> complex:
        return (1.0 - self.B) - 1.5 * self.A * cmath.sqrt(U)

    def f1U_prime_at(self, U: complex) -> complex:
        """d(f1(U)*U)/dU = (3/2)*A*sqrt(U) + B, exact for this ansatz."""
        return 1.5 * self.A * cmath.sqrt(U) + self.B

    def F_at(self, U: complex) -> complex:
        """Right-hand side of the displaced ODE: F(U) = (p - 2*delta)*U - U^2.

        The displacement absorbs k, so no constant term remains here.
        """
        return (self.p - 2.0 * self.delta) * U - U * U

    def displaced_residual(self, U: complex, dU: complex, d2U: complex) -> complex:
        """Residual of the displaced second-order ODE at given jet values.

        With p = 2*delta + 6/25 the coefficient p - 2*delta is universal
        (delta-independent), which is what makes the solution family
        universal.
        """
        return d2U - dU + self.F_at(U)


@dataclass(frozen=True)
class CompoundFactorization:
    """Factorization data for the compound travelling-wave ODE.

    Satisfies A^2 = q/2, B = (A+1)/(3A),
    C = (1/18)*[(2-9p)/A + 1/A^2 - 1/A^3], k = C*(1-2A)/(3A).
    The compatible first-order equation is the Riccati equation
    U' = A*U^2 + B*U + C.
    """

    A: float
    B: float
    C: float
    p: float
    q: float
    k: float
    sign: Sign

    def f1_at(self, U: complex) -> complex:
        if U == 0:
            raise ParameterDomainError("f1 = (A*U^2 + B*U + C)/U is undefined at U = 0")
        return (self.A * U * U + self.B * U + self.C) / U

    def f1_times_U_at(self, U: complex) -> complex:
        return self.A * U * U + self.B * U + self.C

    def f2_at(self, U: complex) -> complex:
        return -2.0 * self.A * U + (1.0 - self.B)

    def f1U_prime_at(self, U: complex) -> complex:
        """d(f1(U)*U)/dU = 2*A*U + B, exact for this ansatz."""
        return 2.0 * self.A * U + self.B

    def F_at(self, U: complex) -> complex:
        """F(U) = p*U - U^2 - q*U^3 - k with this factorization's own k."""
        return self.p * U - U * U - self.q * U**3 - self.k

    def riccati_rhs(self, U: complex) -> complex:
        return self.A * U * U + self.B * U + self.C


def factorize_kdvb(delta: float, sign: Sign) -> KdvbFactorization:
    """Factorize the displaced KdVB ODE for a given displacement.

    delta is a free real parameter; the factorization exists for every value
    and fixes p = 2*delta + 6/25 and k = p*delta - delta^2.
    """
    A = sign.factor * math.sqrt(2.0 / 3.0)
    B = 2.0 / 5.0
    p = 2.0 * delta + 6.0 / 25.0
    k = p * delta - delta * delta
    return KdvbFactorization(A=A, B=B, delta=delta, p=p, k=k, sign=sign)


def factorize_compound(reduced: ReducedParams, sign: Sign) -> CompoundFactorization:
    """Factorize the compound ODE for given (p, q) and branch sign.

    q = 0 has no cubic term and is rejected; q < 0 would make A imaginary
    and is outside the implemented theory.
    """
    p, q = reduced.p, reduced.q
    if q == 0:
        raise ParameterDomainError("compound factorization requires q != 0")
    if q < 0:
        raise UnsupportedDomainError(
            "compound factorization requires q > 0 for a real branch "
            "coefficient; q < 0 (beta*s < 0) is unsupported"
        )
    A = sign.factor * math.sqrt(q / 2.0)
    B = (A + 1.0) / (3.0 * A)
    C = ((2.0 - 9.0 * p) / A + 1.0 / A**2 - 1.0 / A**3) / 18.0
    k = C * (1.0 - 2.0 * A) / (3.0 * A)
    return CompoundFactorization(A=A, B=B, C=C, p=p, q=q, k=k, sign=sign)


@dataclass(frozen=True)
class FactorizationCheck:
    """Max residuals of the two compatibility conditions over a sample set."""

    max_product: float
    max_closure: float
    n_samples: int


def verify_factorization(
    f1_at: Callable[[complex], complex],
    f2_at: Callable[[complex], complex],
    F_at: Callable[[complex], complex],
    f1U_prime_at: Callable[[complex], complex],
    samples: Iterable[complex],
) -> FactorizationCheck:
    """Check the two factorization conditions numerically at sample points.

    Returns the max over samples of |f1(U)*f2(U) - F(U)/U| and of
    |f2(U) + d(f1(U)*U)/dU - 1|.  The derivative must be supplied as a
    closed-form callable (finite differencing is deliberately reserved for
    the independent checks in the verify module).  U = 0 is rejected: the
    product condition divides by U.
    """
    max_product = 0.0
    max_closure = 0.0
    n = 0
    for U in samples:
        if U == 0:
            raise ParameterDomainError("the product condition divides by U; U = 0 is not a legal sample")
        r1 = abs(f1_at(U) * f2_at(U) - F_at(U) / U)
        r2 = abs(f2_at(U) + f1U_prime_at(U) - 1.0)
        max_product = max(max_product, r1)
        max_closure = max(max_closure, r2)
        n += 1
    if n == 0:
        raise ParameterDomainError("empty sample set")
    return FactorizationCheck(max_product=max_product, max_closure=max_closure, n_samples=n)

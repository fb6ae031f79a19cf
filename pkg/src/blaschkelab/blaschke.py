"""Finite Blaschke products on the unit disc.

A product of order n is B(z) = e^{i theta} * prod (z - a_i) / (1 - conj(a_i) z)
with all |a_i| < 1.  This module holds the rational form P/Q, locates the
critical points and branch values, and exposes the Taylor/matrix views of the
induced multiplication operator on the Bergman space (orthonormal basis
e_k = sqrt(k+1) z^k, so <z^k, z^k> = 1/(k+1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULTS
from .cpoly import Poly, RootCluster, roots
from .errors import BranchCountError, DegenerateClustering

__all__ = [
    "BlaschkeProduct",
    "BranchData",
    "from_spec",
    "to_spec",
    "taylor",
    "truncated_matrix",
    "random_product",
]

_MAX_MODULUS = 1.0 - 1e-9
_TAYLOR_CAP = 4096


@dataclass(frozen=True)
class BlaschkeProduct:
    """Finite Blaschke product stored as a rational function P/Q.

    Parameters
    ----------
    theta : float
        Unimodular phase, B = e^{i theta} * prod of disc automorphism factors.
    zeros : sequence of complex
        Zeros a_i with |a_i| < 1 - 1e-9; repeats allowed; order >= 1.
    """

    theta: float
    zeros: tuple
    P: Poly = field(init=False, repr=False, compare=False)
    Q: Poly = field(init=False, repr=False, compare=False)

    def __init__(self, theta, zeros):
        zeros = tuple(complex(a) for a in zeros)
        if len(zeros) < 1:
            raise ValueError("a Blaschke product needs at least one zero")
        for a in zeros:
            if abs(a) >= _MAX_MODULUS:
                raise ValueError(f"zero {a} has modulus >= {_MAX_MODULUS}")
        object.__setattr__(self, "theta", float(theta))
        object.__setattr__(self, "zeros", zeros)
        phase = complex(math.cos(self.theta), math.sin(self.theta))
        object.__setattr__(self, "P", phase * Poly.from_roots(zeros))
        q = Poly([1.0])
        for a in zeros:
            q = q * Poly([1.0, -a.conjugate()])
        object.__setattr__(self, "Q", q)

    @property
    def order(self) -> int:
        return len(self.zeros)

    def evaluate(self, z):
        """B(z) for scalar or ndarray `z` (valid wherever Q(z) != 0)."""
        return self.P(z) / self.Q(z)

    __call__ = evaluate

    def derivative_value(self, z):
        """B'(z) = (P'Q - PQ') / Q**2."""
        p, dp = self.P.eval_with_derivative(z)
        q, dq = self.Q.eval_with_derivative(z)
        return (dp * q - p * dq) / (q * q)

    def critical_numerator(self) -> Poly:
        """P'Q - PQ', whose disc roots are the critical points of B.

        Leading coefficients that are pure convolution noise (below
        1e-13 * max|coeff|) are trimmed so the root finder sees the true
        degree.
        """
        n = self.P.derivative() * self.Q - self.P * self.Q.derivative()
        return n.trimmed(1e-13)

    def branch_data(self, roots_tol=1e-9, dedup_tol=None, seed=None) -> "BranchData":
        """Critical points inside the disc and deduplicated branch values.

        The residual tolerance for the numerator roots defaults to 1e-9
        rather than the global default: reflected critical points outside the
        disc can sit at large modulus where Horner evaluation noise alone
        exceeds a 1e-12-level bound.  Interior critical points (the ones
        returned) are polished far beyond this and satisfy |B'(c)| < 1e-9.

        Raises
        ------
        BranchCountError
            If interior critical multiplicities do not sum to order - 1.
        DegenerateClustering
            If two branch-value candidates land in the ambiguity band
            [dedup_tol, 10 * dedup_tol).
        """
        dedup_tol = DEFAULTS.dedup_tol if dedup_tol is None else dedup_tol
        numer = self.critical_numerator()
        if numer.degree < 1:
            interior: list[RootCluster] = []
        else:
            interior = [c for c in roots(numer, tol=roots_tol, seed=seed) if abs(c.center) < 1.0]
        total = sum(c.multiplicity for c in interior)
        if total != self.order - 1:
            raise BranchCountError(
                f"interior critical multiplicities sum to {total}, expected {self.order - 1}"
            )
        candidates = [complex(self.evaluate(c.center)) for c in interior]
        for i in range(len(candidates)):
            for j in range(i + 1, len(candidates)):
                d = abs(candidates[i] - candidates[j])
                if dedup_tol <= d < 10.0 * dedup_tol:
                    raise DegenerateClustering(
                        f"branch values {candidates[i]} and {candidates[j]} are "
                        f"{d:.3e} apart, inside the dedup ambiguity band"
                    )
        values: list[complex] = []
        for cand in sorted(candidates, key=lambda v: (v.real, v.imag)):
            if not any(abs(cand - v) < dedup_tol for v in values):
                values.append(cand)
        return BranchData(critical_points=tuple(interior), branch_values=tuple(values))


@dataclass(frozen=True)
class BranchData:
    """Interior critical clusters and the deduplicated branch-value set."""

    critical_points: tuple
    branch_values: tuple


def from_spec(data) -> BlaschkeProduct:
    """Build a product from {"theta": float, "zeros": [[re, im], ...]}."""
    if not isinstance(data, dict) or "theta" not in data or "zeros" not in data:
        raise ValueError('spec must be {"theta": real, "zeros": [[re, im], ...]}')
    zeros = [complex(re, im) for re, im in data["zeros"]]
    return BlaschkeProduct(theta=float(data["theta"]), zeros=zeros)


def to_spec(b: BlaschkeProduct) -> dict:
    return {"theta": b.theta, "zeros": [[a.real, a.imag] for a in b.zeros]}


def default_taylor_length(b: BlaschkeProduct) -> int:
    """Length at which the geometric Taylor tail drops below 1e-14."""
    base = max(abs(a) for a in b.zeros) + 1e-3
    n = math.ceil(math.log(1e-14) / math.log(base))
    return min(max(n, b.order + 1), _TAYLOR_CAP)


def taylor(b: BlaschkeProduct, length=None) -> np.ndarray:
    """First `length` Taylor coefficients of B at 0.

    Uses the reciprocal-series recurrence for 1/Q followed by convolution
    with P; the coefficients decay geometrically like (max|a_i|)^k past the
    polynomial degree.
    """
    if length is None:
        length = default_taylor_length(b)
    q = list(b.Q.coeffs)
    recip = np.zeros(length, dtype=complex)
    recip[0] = 1.0 / q[0]
    for m in range(1, length):
        acc = 0j
        for j in range(1, min(m, len(q) - 1) + 1):
            acc += q[j] * recip[m - j]
        recip[m] = -acc / q[0]
    p = np.array(b.P.coeffs, dtype=complex)
    full = np.convolve(p, recip)[:length]
    out = np.zeros(length, dtype=complex)
    out[: len(full)] = full
    return out


def truncated_matrix(b: BlaschkeProduct, size: int) -> np.ndarray:
    """Multiplication-by-B compressed to the first `size` Bergman basis vectors.

    With orthonormal basis e_k = sqrt(k+1) z^k and Taylor coefficients b_j,
    the matrix is lower triangular with M[m, k] = sqrt((k+1)/(m+1)) b_{m-k}.
    """
    coeffs = taylor(b, size)
    m = np.zeros((size, size), dtype=complex)
    for row in range(size):
        for col in range(row + 1):
            m[row, col] = math.sqrt((col + 1.0) / (row + 1.0)) * coeffs[row - col]
    return m


def random_product(order, rng, radius=0.6) -> BlaschkeProduct:
    """Random product with zeros uniform in a centered disc of given radius."""
    u = rng.random(order)
    v = rng.random(order)
    zeros = radius * np.sqrt(u) * np.exp(2j * np.pi * v)
    return BlaschkeProduct(theta=float(2.0 * np.pi * rng.random()), zeros=zeros)

"""Durbin-Levinson recursion, its constructive inverse, Toeplitz
determinants through prediction-error variances, finite predictors, and
the monic orthogonal polynomials generated by the same coefficients.

The recursion runs on Hermitian inputs: the reversed predictor row is
conjugated in the order update, which reduces to the textbook real-case
formula for real data.  Agreement with dense Toeplitz solves on random
Hermitian positive definite inputs is enforced by the test-suite.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NotPositiveDefinite
from .seq import AutocovSeq, VerblunskySeq

# below this, 1 - |alpha|^2 is numerically garbage: refuse to continue
_UNDERFLOW = 1e-14


@dataclass(frozen=True)
class LevinsonState:
    """Everything the recursion produces up to its truncation order:
    partial autocorrelations, prediction-error variances v_0..v_N, and the
    triangular array of finite-predictor rows."""

    alpha: VerblunskySeq
    v: np.ndarray
    phi: tuple

    @property
    def order(self):
        return self.alpha.order

    def predictor(self, n):
        """Finite-predictor coefficient row phi_{n,1..n}."""
        if not 1 <= n <= self.order:
            raise ValueError("predictor order out of range")
        return self.phi[n - 1]


def _reflection(gamma, phi, v, n):
    # alpha_{n+1} = [gamma_{n+1} - sum_{j=1..n} phi_{nj} gamma_{n+1-j}] / v_n
    num = gamma[n + 1] - (np.dot(phi, gamma[n:0:-1]) if n else 0.0)
    a = num / v
    if not np.isfinite(a) or abs(a) >= 1.0 or 1.0 - abs(a) ** 2 < _UNDERFLOW:
        raise NotPositiveDefinite(
            f"input fails positive definiteness at order {n + 1}"
        )
    return a


def _next_row(phi, a):
    # phi_{n+1,j} = phi_{n,j} - a * conj(phi_{n,n+1-j}), appended with a
    return np.concatenate([phi - a * np.conj(phi[::-1]), [a]])


def pacf_from_acov(g, order=None):
    """Run the Durbin-Levinson recursion on an autocovariance sequence.

    Returns the full state: alpha_1..alpha_N, variances v_0..v_N with
    v_0 = gamma_0 and v_{n+1} = v_n (1 - |alpha_{n+1}|^2), and the
    predictor rows.  Raises NotPositiveDefinite as soon as some order
    yields |alpha| >= 1 or a non-positive error variance, which signals
    that gamma is not a valid autocovariance at that order.
    """
    gamma = g.gamma
    N = g.order if order is None else int(order)
    if N > g.order:
        raise ValueError(f"need autocovariances to lag {N}, have {g.order}")
    g0 = gamma[0].real
    if g0 <= 0.0:
        raise NotPositiveDefinite("gamma_0 must be positive")
    v = np.empty(N + 1)
    v[0] = g0
    alpha = np.empty(N, dtype=complex)
    rows = []
    phi = np.zeros(0, dtype=complex)
    for n in range(N):
        a = _reflection(gamma, phi, v[n], n)
        alpha[n] = a
        phi = _next_row(phi, a)
        rows.append(phi)
        v[n + 1] = v[n] * (1.0 - abs(a) ** 2)
    return LevinsonState(VerblunskySeq(alpha), v, tuple(rows))


def acov_from_pacf(a, gamma0):
    """Constructive inverse of the recursion: the unique autocovariance
    sequence with the given partial autocorrelations and variance gamma0.

    Rearranges the reflection step into
    gamma_{n+1} = alpha_{n+1} v_n + sum_j phi_{nj} gamma_{n+1-j}.
    """
    if not gamma0 > 0:
        raise ValueError("gamma0 must be positive")
    if not isinstance(a, VerblunskySeq):
        a = VerblunskySeq(np.asarray(a))
    alpha = a.alpha
    N = alpha.size
    gamma = np.zeros(N + 1, dtype=complex)
    gamma[0] = gamma0
    v = float(gamma0)
    phi = np.zeros(0, dtype=complex)
    for n in range(N):
        gamma[n + 1] = alpha[n] * v + (np.dot(phi, gamma[n:0:-1]) if n else 0.0)
        phi = _next_row(phi, alpha[n])
        v *= 1.0 - abs(alpha[n]) ** 2
    return AutocovSeq(gamma)


def toeplitz_logdet(g, n):
    """log det of the n x n Toeplitz matrix with entries gamma_{j-i},
    computed as sum_{k<n} log v_k.  Log-space keeps orders in the hundreds
    from overflowing; exponentiate only on demand."""
    n = int(n)
    if n < 1:
        raise ValueError("matrix order must be >= 1")
    state = pacf_from_acov(g, n - 1)
    return float(np.sum(np.log(state.v)))


def toeplitz_det(g, n):
    """det of the n x n Toeplitz truncation, as the product of
    prediction-error variances v_0 ... v_{n-1}."""
    return float(np.exp(toeplitz_logdet(g, n)))


def finite_predictors(g, n):
    """Best-linear-predictor coefficients phi_{n,1..n} for one step ahead
    from n observed values."""
    return pacf_from_acov(g, int(n)).predictor(int(n))


def predictor_gap(phi_row, r, sigma):
    """l2 distance between a finite-predictor row (zero-extended) and the
    infinite-predictor coefficients sigma * r_j, j >= 1."""
    from .seq import coeff_values

    target = sigma * coeff_values(r)[1:]
    L = max(len(phi_row), len(target))
    a = np.zeros(L, dtype=complex)
    a[: len(phi_row)] = phi_row
    b = np.zeros(L, dtype=complex)
    b[: len(target)] = target
    return float(np.linalg.norm(a - b))


def solve_yule_walker(gamma, n):
    """Levinson solve of the order-n Yule-Walker system
    sum_j phi_j gamma_{k-j} = gamma_k (k = 1..n); O(n^2) time, O(n) memory.

    Accepts a raw lag array (real or complex) so the bench can run large
    orders without building the triangular predictor array.
    """
    gamma = np.asarray(gamma)
    n = int(n)
    if n > gamma.size - 1:
        raise ValueError(f"need autocovariances to lag {n}, have {gamma.size - 1}")
    v = gamma[0].real
    if v <= 0.0:
        raise NotPositiveDefinite("gamma_0 must be positive")
    phi = np.zeros(0, dtype=gamma.dtype)
    for k in range(n):
        a = _reflection(gamma, phi, v, k)
        phi = _next_row(phi, a)
        v = v * (1.0 - abs(a) ** 2)
    return phi


@dataclass(frozen=True)
class OpucPoly:
    """Monic polynomial from the unit-circle recursion; coefficients in
    ascending order, leading coefficient exactly 1, constant term equal to
    -conj(alpha_n) at degree n."""

    coeffs: np.ndarray

    @property
    def degree(self):
        return self.coeffs.size - 1

    def __call__(self, z):
        return np.polyval(self.coeffs[::-1], z)


def opuc_polynomials(a, n):
    """Monic degree-n orthogonal polynomial via the recursion

        Phi_{k+1}(z) = z Phi_k(z) - conj(alpha_{k+1}) Phi_k^*(z),

    starting from Phi_0 = 1, with Phi^* the reversed polynomial
    z^k conj(Phi(1/conj(z)))."""
    if not isinstance(a, VerblunskySeq):
        a = VerblunskySeq(np.asarray(a))
    n = int(n)
    if n > a.order:
        raise ValueError(f"need {n} coefficients, have {a.order}")
    c = np.array([1.0 + 0.0j])
    for k in range(n):
        shifted = np.concatenate([[0.0], c])
        reversed_conj = np.concatenate([np.conj(c)[::-1], [0.0]])
        c = shifted - np.conj(a.alpha[k]) * reversed_conj
    return OpucPoly(c)

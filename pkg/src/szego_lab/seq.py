"""Sequence containers and one-sided power-series algebra.

Everything is stored one-sided: autocovariances gamma_0..gamma_N, partial
autocorrelations alpha_1..alpha_N, and generic coefficient series
c_0..c_N.  Hermitian extensions (gamma_{-n} = conj(gamma_n)) are applied
inside the operations that need them, never stored.  All arithmetic is
IEEE-754 double precision; truncation orders are caller-supplied.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidCoefficient, ZeroLeadingCoefficient

_REAL_SLACK = 1e-9


class Role(Enum):
    """What a coefficient series represents."""

    MA = "ma"
    AR = "ar"
    CEPSTRUM = "cepstrum"
    PHASE = "phase"
    POLY = "poly"


def _freeze(arr):
    arr.flags.writeable = False
    return arr


def coeff_values(a):
    """Coefficient array of a CoeffSeries, or a complex view of raw input."""
    if isinstance(a, CoeffSeries):
        return a.coeffs
    return np.asarray(a, dtype=complex)


@dataclass(frozen=True)
class AutocovSeq:
    """Truncated Hermitian autocovariance sequence gamma_0..gamma_N.

    gamma_0 is real and positive (zero is tolerated only for the all-zero
    sequence a sample estimator produces on a null signal, flagged
    degenerate) and |gamma_n| <= gamma_0 by Cauchy-Schwarz.  Positive
    definiteness of the implied Toeplitz matrices is checked lazily by the
    Levinson recursion, which raises NotPositiveDefinite on violation.
    """

    gamma: np.ndarray

    def __post_init__(self):
        g = np.array(self.gamma, dtype=complex)
        if g.ndim != 1 or g.size == 0:
            raise ValueError("gamma must be a non-empty 1-d array")
        g0 = g[0]
        if abs(g0.imag) > _REAL_SLACK * max(abs(g0), 1.0):
            raise ValueError("gamma_0 must be real")
        g0 = g0.real
        if g0 < 0:
            raise ValueError("gamma_0 must be nonnegative")
        if g0 == 0 and np.any(g != 0):
            raise ValueError("gamma_0 = 0 requires an all-zero sequence")
        if np.any(np.abs(g[1:]) > g0 * (1 + 1e-12)):
            raise ValueError("|gamma_n| <= gamma_0 violated")
        g[0] = g0
        object.__setattr__(self, "gamma", _freeze(g))

    @property
    def order(self):
        return self.gamma.size - 1

    @property
    def degenerate(self):
        return self.gamma[0].real == 0.0


@dataclass(frozen=True)
class VerblunskySeq:
    """Truncated partial autocorrelation sequence alpha_1..alpha_N, every
    entry strictly inside the unit disc."""

    alpha: np.ndarray

    def __post_init__(self):
        a = np.array(self.alpha, dtype=complex)
        if a.ndim != 1:
            raise ValueError("alpha must be a 1-d array")
        if a.size and np.max(np.abs(a)) >= 1.0:
            raise InvalidCoefficient("need |alpha_n| < 1 for every n")
        object.__setattr__(self, "alpha", _freeze(a))

    @property
    def order(self):
        return self.alpha.size


@dataclass(frozen=True)
class SpectralGrid:
    """Spectral density sampled at theta_j = 2*pi*j/M with M a power of two.

    Values are nonnegative; operations that take logarithms demand strict
    positivity and refuse rather than clamp.
    """

    values: np.ndarray

    def __post_init__(self):
        w = np.array(self.values, dtype=float)
        if w.ndim != 1 or w.size < 4 or (w.size & (w.size - 1)) != 0:
            raise ValueError("grid size must be a power of two, at least 4")
        if np.any(w < 0):
            raise ValueError("density values must be nonnegative")
        object.__setattr__(self, "values", _freeze(w))

    @property
    def size(self):
        return self.values.size

    @property
    def thetas(self):
        return 2.0 * np.pi * np.arange(self.size) / self.size

    def mean(self):
        """Quadrature of w against dtheta/2pi; approximates gamma_0."""
        return float(self.values.mean())


@dataclass(frozen=True)
class CoeffSeries:
    """One-sided power-series coefficients c_0..c_N with a role tag."""

    coeffs: np.ndarray
    role: Role

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coeffs must be a non-empty 1-d array")
        if self.role is Role.MA:
            if abs(c[0].imag) > _REAL_SLACK * max(abs(c[0]), 1.0) or c[0].real <= 0:
                raise ValueError("MA series requires real positive c_0")
            c[0] = c[0].real
        elif self.role is Role.CEPSTRUM:
            if abs(c[0].imag) > _REAL_SLACK * max(abs(c[0]), 1.0):
                raise ValueError("cepstrum series requires real c_0")
            c[0] = c[0].real
        object.__setattr__(self, "coeffs", _freeze(c))

    @property
    def order(self):
        return self.coeffs.size - 1


@dataclass(frozen=True)
class NormReport:
    """Truncated norm values with tail-extrapolation divergence verdicts.

    The boolean verdicts are statistical extrapolations filled in by the
    classification layer; raw partial sums never set them.
    """

    l1: float
    l2: float
    h_half_sq: float
    l1_diverging: bool = False
    l2_diverging: bool = False
    h_half_diverging: bool = False


def lp_norm(a, p):
    """(sum |a_n|^p)^(1/p) over the truncation, p in {1, 2}."""
    if p not in (1, 2):
        raise ValueError("p must be 1 or 2")
    c = np.abs(coeff_values(a))
    if p == 1:
        return float(np.sum(c))
    return float(np.sqrt(np.sum(c * c)))


def h_half_norm_sq(a):
    """sum_n (1 + n) |a_n|^2 over the one-sided truncation.

    Index n is the position in the series; any symmetric negative-index
    extension is the caller's concern.
    """
    c = np.abs(coeff_values(a))
    n = np.arange(c.size)
    return float(np.sum((1.0 + n) * c * c))


def series_exp(L, order):
    """Exponentiate a cepstrum series into a moving-average series.

    Returns m_0..m_order with m_0 = exp(L_0/2) and

        n m_n = sum_{k=1..n} k L_k m_{n-k},

    so the output is the formal power-series exponential of
    L_0/2 + sum_{k>=1} L_k z^k.  Only the tag is checked when a
    CoeffSeries is supplied; raw arrays are accepted.
    """
    if isinstance(L, CoeffSeries) and L.role is not Role.CEPSTRUM:
        raise ValueError("series_exp expects a cepstrum-role series")
    c = coeff_values(L)
    N = int(order)
    m = np.zeros(N + 1, dtype=complex)
    m[0] = np.exp(c[0].real / 2.0)
    K = c.size - 1
    kL = np.arange(1, K + 1) * c[1 : K + 1]
    for n in range(1, N + 1):
        k = min(n, K)
        if k:
            m[n] = np.dot(kL[:k], m[n - k : n][::-1]) / n
    return CoeffSeries(m, Role.MA)


def series_reciprocal_negated(m, order):
    """Autoregressive series r with (sum m_k z^k)(sum r_k z^k) = -1
    as formal power series through the requested order."""
    c = coeff_values(m)
    if c[0] == 0:
        raise ZeroLeadingCoefficient("leading coefficient m_0 must be nonzero")
    N = int(order)
    r = np.zeros(N + 1, dtype=complex)
    r[0] = -1.0 / c[0]
    K = c.size - 1
    for n in range(1, N + 1):
        k = min(n, K)
        if k:
            r[n] = -np.dot(c[1 : k + 1], r[n - k : n][::-1]) / c[0]
    return CoeffSeries(r, Role.AR)


def convolve_acov(m):
    """Autocovariance generated by a moving-average series:
    gamma_n = sum_k m_{n+k} conj(m_k), truncated at the series order."""
    if isinstance(m, CoeffSeries) and m.role is not Role.MA:
        raise ValueError("convolve_acov expects an MA-role series")
    c = coeff_values(m)
    K = c.size
    gamma = np.array([np.dot(c[n:], np.conj(c[: K - n])) for n in range(K)])
    return AutocovSeq(gamma)


def evaluate_on_circle(a, grid_size):
    """Values of sum_n c_n e^{i n theta_j} on the uniform grid theta_j =
    2*pi*j/grid_size, which must be at least the series length."""
    c = coeff_values(a)
    M = int(grid_size)
    if M < c.size:
        raise ValueError("grid too small for the series truncation")
    buf = np.zeros(M, dtype=complex)
    buf[: c.size] = c
    return np.fft.ifft(buf) * M

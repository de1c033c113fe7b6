"""Fourier-Walsh analysis of functions on the hypercube {-1,1}^n.

Conventions, fixed once so that tables, files and tests are bit-exact:

* A point of {-1,1}^n is an index x in [0, 2^n).  Bit (i-1) of x stores
  coordinate eps_i: bit value 0 means eps_i = +1, bit value 1 means
  eps_i = -1.
* A subset A of {1..n} is a mask m in [0, 2^n): bit (i-1) is set iff
  i belongs to A.  The character W_A evaluates as
      W_A(x) = prod_{i in A} eps_i = (-1)^popcount(m & x).
* The forward transform returns expectations,
      coeff[m] = 2^-n * sum_x f(x) * (-1)^popcount(m & x),
  so coefficients sit on the E(f * W_A) scale and the inverse transform
  carries no normalization factor.

From the squared coefficient weights w_m = |coeff[m]|^2 the module
computes the degree-weighted spectral mass (influence)
    I = sum_m w_m * popcount(m)
and the base-2 spectral entropy
    H = -sum_m w_m * log2(w_m),        0 * log 0 := 0,
which is the Shannon entropy of {w_m} when the function has unit L2
norm, and is used unchanged for non-normalized functions as well.

Values are stored as complex128 (a pair of float64 per point); real
functions are the subcase with zero imaginary part and take no special
code path.  Tables of size 2^n are refused above a configurable cap
(default n = 26, about 1 GiB of values).  All operations are pure and
the stored arrays are frozen, so values are safe to share across
threads; reductions run in a fixed order for run-to-run determinism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ParameterError, ResourceLimitError

#: Largest dimension for which 2^n tables are built by default.
DEFAULT_TABLE_CAP = 26

#: Squared weights below this count as exact zero in entropy sums,
#: matching the 0*log(0) = 0 convention without log underflow noise.
ZERO_WEIGHT_CUTOFF = 1e-300


def check_table_dim(n: int, max_table_n: int | None = None) -> None:
    """Raise ResourceLimitError when a 2^n table would exceed the cap."""
    cap = DEFAULT_TABLE_CAP if max_table_n is None else max_table_n
    if n > cap:
        raise ResourceLimitError(
            f"dimension n={n} exceeds the table cap {cap}; "
            f"a 2^{n}-entry table was refused"
        )


def _frozen_table(values, n: int) -> np.ndarray:
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise ParameterError(f"dimension must be a non-negative integer, got {n!r}")
    arr = np.asarray(values, dtype=np.complex128).reshape(-1).copy()
    if arr.size != (1 << n):
        raise ParameterError(
            f"table length {arr.size} does not match 2^{n} = {1 << n}"
        )
    if not (np.isfinite(arr.real).all() and np.isfinite(arr.imag).all()):
        raise ParameterError("table contains non-finite values")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class HypercubeFunction:
    """A function {-1,1}^n -> C as a frozen table of 2^n values."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_table(self.values, self.n))

    @property
    def is_real(self) -> bool:
        return bool(np.all(self.values.imag == 0.0))


@dataclass(frozen=True)
class FourierSpectrum:
    """Coefficient table indexed by subset masks (see module docstring)."""

    n: int
    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _frozen_table(self.coeffs, self.n))


@dataclass(frozen=True)
class SpectralStats:
    """Norms plus the two spectral functionals of one function."""

    l2_norm: float
    linf_norm: float
    influence: float
    entropy: float
    total_weight: float  # sum of squared coefficient weights (Parseval mass)


@lru_cache(maxsize=None)
def popcounts(n: int) -> np.ndarray:
    """popcount of every mask in [0, 2^n), in ascending mask order."""
    pc = np.zeros(1, dtype=np.uint8)
    for _ in range(n):
        pc = np.concatenate([pc, pc + 1])
    pc.setflags(write=False)
    return pc


def fwht_inplace(table: np.ndarray) -> np.ndarray:
    """Unnormalized in-place butterfly transform, one pass per coordinate.

    Works on any real or complex float dtype.  Pass k pairs indices that
    differ in bit k; the intra-pass order is fixed, so results do not
    depend on how passes might be parallelized.
    """
    size = table.shape[0]
    h = 1
    while h < size:
        view = table.reshape(-1, 2, h)
        top = view[:, 0, :] + view[:, 1, :]
        bottom = view[:, 0, :] - view[:, 1, :]
        view[:, 0, :] = top
        view[:, 1, :] = bottom
        h *= 2
    return table


def walsh_transform(f: HypercubeFunction, max_table_n: int | None = None) -> FourierSpectrum:
    """Forward transform: coeff[m] = 2^-n sum_x f(x) (-1)^popcount(m & x)."""
    check_table_dim(f.n, max_table_n)
    table = f.values.astype(np.complex128, copy=True)
    fwht_inplace(table)
    table *= math.ldexp(1.0, -f.n)  # exact power-of-two scaling
    return FourierSpectrum(f.n, table)


def inverse_transform(s: FourierSpectrum, max_table_n: int | None = None) -> HypercubeFunction:
    """Inverse transform: value[x] = sum_m coeff[m] (-1)^popcount(m & x)."""
    check_table_dim(s.n, max_table_n)
    table = s.coeffs.astype(np.complex128, copy=True)
    fwht_inplace(table)
    return HypercubeFunction(s.n, table)


def _squared_weights(coeffs: np.ndarray) -> np.ndarray:
    # re^2 + im^2 rather than abs()**2: keeps exact cases exact.
    return coeffs.real ** 2 + coeffs.imag ** 2


def influence(s: FourierSpectrum) -> float:
    """Degree-weighted spectral mass sum_m |coeff[m]|^2 popcount(m)."""
    w = _squared_weights(s.coeffs)
    return float(np.sum(w * popcounts(s.n)))


def entropy(s: FourierSpectrum) -> float:
    """Base-2 entropy -sum w_m log2 w_m of the squared weights.

    Zero weights contribute nothing; the sum is well defined (and used)
    for non-normalized spectra too.
    """
    w = _squared_weights(s.coeffs)
    live = w >= ZERO_WEIGHT_CUTOFF
    if not live.any():
        return 0.0
    w = w[live]
    return float(-np.sum(w * np.log2(w)))


def stats(f: HypercubeFunction, max_table_n: int | None = None) -> SpectralStats:
    """L2/Linf norms plus influence, entropy and Parseval mass of f."""
    s = walsh_transform(f, max_table_n)
    sq = _squared_weights(f.values)
    l2 = math.sqrt(float(np.sum(sq)) * math.ldexp(1.0, -f.n))
    linf = float(np.max(np.abs(f.values)))
    w = _squared_weights(s.coeffs)
    return SpectralStats(
        l2_norm=l2,
        linf_norm=linf,
        influence=influence(s),
        entropy=entropy(s),
        total_weight=float(np.sum(w)),
    )


def scale(f: HypercubeFunction, a: complex) -> HypercubeFunction:
    """Pointwise multiple a*f.

    Downstream statistics obey I(a f) = |a|^2 I(f) and
    H(|a f|-spectrum) = |a|^2 H - (|a|^2 log2 |a|^2) ||f||_2^2.
    """
    a = complex(a)
    if not (math.isfinite(a.real) and math.isfinite(a.imag)):
        raise ParameterError(f"scale factor must be finite, got {a!r}")
    return HypercubeFunction(f.n, f.values * a)


def conjugate(f: HypercubeFunction) -> HypercubeFunction:
    """Pointwise complex conjugate; squared coefficient weights are unchanged."""
    return HypercubeFunction(f.n, np.conj(f.values))


def lift_zero_mean(f: HypercubeFunction, max_table_n: int | None = None) -> HypercubeFunction:
    """Multiply by a fresh coordinate: g(x, eps_{n+1}) = eps_{n+1} f(x).

    g lives on {-1,1}^(n+1), has zero mean, keeps the L2/Linf norms and
    the entropy of f, and gains exactly ||f||_2^2 of influence (every
    coefficient moves up one degree).
    """
    check_table_dim(f.n + 1, max_table_n)
    return HypercubeFunction(f.n + 1, np.concatenate([f.values, -f.values]))

"""Exact matrix functions of the cyclic shift matrix.

Every coefficient matrix of the cyclic n-mode squeezer is a function of the
n-cycle permutation matrix (or of it plus its transpose) and is therefore
circulant.  Such matrices are evaluated exactly on the roots-of-unity
spectrum and reconstructed as dense real matrices.  A truncated-Taylor
matrix exponential is kept alongside as an independent cross-check for the
spectral path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

__all__ = [
    "EXPONENT_LIMIT",
    "CirculantSpectrum",
    "QuarticShiftExpansion",
    "cyclic_shift",
    "shift_exponential",
    "symmetric_gram",
    "series_expm",
    "cayley_hamilton_n4",
]

# Largest exponent magnitude fed to exp().  The spectral radius of the
# coupling matrices used here is at most 2, so 2*|lambda| <= EXPONENT_LIMIT
# keeps every eigenvalue finite in double precision; a hard error beats
# silent inf propagation.
EXPONENT_LIMIT = 700.0

# Imaginary residue allowed when collapsing the complex spectral sum to a
# real matrix, relative to the largest eigenvalue magnitude.
_RESIDUE_TOL = 1e-13


def _check_mode_count(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise ValueError(f"mode count must be an integer, got {n!r}")
    if n < 2:
        raise ValueError(f"mode count must be at least 2, got {n}")
    return int(n)


def _check_exponent(magnitude: float) -> None:
    if not math.isfinite(magnitude):
        raise ValueError("exponent must be finite")
    if magnitude > EXPONENT_LIMIT:
        raise ValueError(
            f"exponent magnitude {magnitude:g} exceeds the overflow guard "
            f"{EXPONENT_LIMIT:g}"
        )


def cyclic_shift(n: int) -> np.ndarray:
    """Permutation matrix of the n-cycle: ones on the superdiagonal plus the
    bottom-left corner, so mode i couples to mode i+1 (mod n)."""
    n = _check_mode_count(n)
    shift = np.zeros((n, n))
    shift[np.arange(n), (np.arange(n) + 1) % n] = 1.0
    return shift


@dataclass(frozen=True)
class CirculantSpectrum:
    """A matrix function of the cyclic shift, held as a map on its spectrum.

    The shift is diagonal in the discrete Fourier basis with eigenvalues
    exp(i*theta_k), theta_k = 2*pi*k/n.  Applying ``scalar_map`` to those
    eigenvalues and transforming back gives the dense matrix; the result is
    real whenever the map commutes with complex conjugation, which holds for
    every map used in this package.
    """

    n: int
    scalar_map: Callable[[np.ndarray], np.ndarray]

    @property
    def eigenangles(self) -> np.ndarray:
        return 2.0 * math.pi * np.arange(self.n) / self.n

    def eigenvalues(self) -> np.ndarray:
        return np.asarray(self.scalar_map(np.exp(1j * self.eigenangles)))

    def first_row(self) -> np.ndarray:
        """Row 0 of the dense matrix; entry d multiplies offset (j-i) = d.

        Each entry is a compensated (fsum) sum over the spectrum, so entry
        sums downstream keep their accuracy even under heavy cancellation.
        """
        theta = self.eigenangles
        eig = self.eigenvalues()
        scale = max(1.0, float(np.max(np.abs(eig))))
        row = np.empty(self.n)
        for d in range(self.n):
            terms = eig * np.exp(-1j * d * theta)
            real = math.fsum(terms.real)
            imag = math.fsum(terms.imag)
            # conjugate eigenvalue pairs cancel the imaginary parts; anything
            # beyond rounding noise means the scalar map is not
            # conjugation-symmetric
            if abs(imag) > _RESIDUE_TOL * self.n * scale:
                raise ArithmeticError(
                    f"imaginary residue {imag:.3e} in circulant reconstruction "
                    f"(offset {d}, scale {scale:.3e})"
                )
            row[d] = real / self.n
        return row

    def to_dense(self) -> np.ndarray:
        row = self.first_row()
        offsets = (np.arange(self.n)[None, :] - np.arange(self.n)[:, None]) % self.n
        return row[offsets]


def shift_exponential(n: int, s: float, transposed: bool = False) -> np.ndarray:
    """exp(s*A) for the n-cycle shift A, or exp(s*A^T) when ``transposed``.

    Spectral evaluation, hence exact up to rounding; the determinant is 1
    because the shift is traceless.
    """
    n = _check_mode_count(n)
    _check_exponent(abs(s))
    if s == 0.0:
        return np.eye(n)
    dense = CirculantSpectrum(n, lambda z: np.exp(s * z)).to_dense()
    return np.ascontiguousarray(dense.T) if transposed else dense


def symmetric_gram(n: int, lam: float) -> np.ndarray:
    """exp(-lam*(A + A^T)): the symmetric positive-definite circulant whose
    entry sums carry the squeezing law.  Its inverse is the same matrix with
    the sign of ``lam`` flipped."""
    n = _check_mode_count(n)
    _check_exponent(2.0 * abs(lam))
    if lam == 0.0:
        return np.eye(n)
    dense = CirculantSpectrum(n, lambda z: np.exp(-2.0 * lam * z.real)).to_dense()
    # offsets d and n-d are the same entry class; averaging them makes the
    # symmetry exact instead of merely within rounding
    return 0.5 * (dense + dense.T)


def series_expm(matrix: np.ndarray, tol: float = 1e-13) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring of a truncated Taylor series.

    Deliberately independent of the spectral path: no eigenstructure is
    assumed.  The Taylor tail of the scaled series is bounded below
    ``tol / 2**squarings`` in the induced max-row-sum norm before squaring
    back.
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix exponential of a non-finite matrix")
    if not (tol > 0.0):
        raise ValueError(f"tolerance must be positive, got {tol!r}")

    dim = m.shape[0]
    norm = float(np.abs(m).sum(axis=1).max()) if dim else 0.0
    squarings = max(0, int(math.ceil(math.log2(norm / 0.5)))) if norm > 0.5 else 0
    scaled = m / (2.0**squarings)
    scaled_norm = norm / (2.0**squarings)
    inner_tol = tol / (2.0**squarings)

    total = np.eye(dim) + scaled
    term = scaled.copy()
    # tail after the k-th term is below 2*||B||^(k+1)/(k+1)! once ||B|| <= 1/2
    tail = 2.0 * scaled_norm**2 / 2.0
    k = 1
    while tail > inner_tol and k < 60:
        k += 1
        term = term @ scaled / k
        total += term
        tail *= scaled_norm / (k + 1)
    for _ in range(squarings):
        total = total @ total
    return total


class QuarticShiftExpansion(NamedTuple):
    """exp(-lam*A^T) for n = 4 as a cubic polynomial in the shift, using the
    quartic identity A^4 = I (Cayley-Hamilton)."""

    c0: float
    c1: float
    c2: float
    c3: float
    matrix: np.ndarray


def cayley_hamilton_n4(lam: float) -> QuarticShiftExpansion:
    """Closed-form coefficients and matrix of exp(-lam*A^T) at n = 4.

    The coefficients follow from evaluating the exponential on the fourth
    roots of unity; the matrix is the circulant with first column
    (c0, c1, c2, c3).  Its determinant is exactly 1.
    """
    _check_exponent(abs(lam))
    c0 = 0.5 * (math.cosh(lam) + math.cos(lam))
    c1 = -0.5 * (math.sinh(lam) + math.sin(lam))
    c2 = 0.5 * (math.cosh(lam) - math.cos(lam))
    c3 = 0.5 * (-math.sinh(lam) + math.sin(lam))
    coeffs = np.array([c0, c1, c2, c3])
    offsets = (np.arange(4)[:, None] - np.arange(4)[None, :]) % 4
    return QuarticShiftExpansion(c0, c1, c2, c3, coeffs[offsets])

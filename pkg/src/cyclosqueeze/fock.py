"""Brute-force oracle on a truncated multimode Fock space.

The squeezer is built as an explicit unitary exp(i*K) with
K = lam * sum_i Q_i P_{i+1 (mod n)} assembled from truncated ladder
operators, applied to the vacuum, and interrogated for amplitudes and
quadrature variances.  Nothing here touches the circulant analysis, so
agreement between the two routes validates both.

Everything is dense and single-threaded on purpose: the oracle must stay
simple enough to trust.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .squeeze import QuadratureVariances, SqueezeParams

__all__ = [
    "DEFAULT_MAX_DIM",
    "FockBasis",
    "FockStateVector",
    "GeneratorMatrix",
    "ladder",
    "position_operator",
    "momentum_operator",
    "build_generator",
    "squeeze_propagator",
    "apply_squeeze",
    "extract_pair_amplitudes",
    "oracle_variances",
]

# dense complex matrices of this dimension stay comfortably in memory
DEFAULT_MAX_DIM = 4096

# edge-of-cutoff population above which variance extraction refuses to run
DEFAULT_EDGE_THRESHOLD = 1e-3

_HERMITICITY_TOL = 1e-12
_MEAN_TOL = 1e-10


def ladder(cutoff: int) -> tuple[np.ndarray, np.ndarray]:
    """Single-mode annihilation/creation pair truncated at ``cutoff`` levels:
    a|m> = sqrt(m)|m-1>."""
    if isinstance(cutoff, bool) or not isinstance(cutoff, (int, np.integer)):
        raise ValueError(f"cutoff must be an integer, got {cutoff!r}")
    if cutoff < 2:
        raise ValueError(f"cutoff must be at least 2, got {cutoff}")
    lower = np.zeros((cutoff, cutoff))
    lower[np.arange(cutoff - 1), np.arange(1, cutoff)] = np.sqrt(np.arange(1, cutoff))
    return lower, lower.T.copy()


def position_operator(cutoff: int) -> np.ndarray:
    """Q = (a + a+)/sqrt(2): real symmetric tridiagonal."""
    lower, raise_ = ladder(cutoff)
    return (lower + raise_) / math.sqrt(2.0)


def momentum_operator(cutoff: int) -> np.ndarray:
    """P = (a - a+)/(sqrt(2) i): Hermitian with purely imaginary entries."""
    lower, raise_ = ladder(cutoff)
    return (lower - raise_) / (math.sqrt(2.0) * 1j)


@dataclass(frozen=True)
class FockBasis:
    """Truncated number basis |m_1 ... m_n> with each m_i < cutoff.

    Index convention is little-endian and fixed: mode 1 varies fastest, so
    index = m_1 + cutoff*m_2 + cutoff**2*m_3 + ...  Amplitude extraction is
    therefore reproducible bit for bit.
    """

    modes: int
    cutoff: int

    def __post_init__(self) -> None:
        if self.modes < 1:
            raise ValueError(f"need at least one mode, got {self.modes}")
        if self.cutoff < 2:
            raise ValueError(f"cutoff must be at least 2, got {self.cutoff}")

    @property
    def dim(self) -> int:
        return self.cutoff**self.modes

    def index(self, occupations: tuple[int, ...]) -> int:
        if len(occupations) != self.modes:
            raise ValueError(f"expected {self.modes} occupations, got {len(occupations)}")
        idx = 0
        for m in reversed(occupations):
            if not 0 <= m < self.cutoff:
                raise ValueError(f"occupation {m} outside 0..{self.cutoff - 1}")
            idx = idx * self.cutoff + m
        return idx

    def occupations(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.dim:
            raise ValueError(f"index {index} outside 0..{self.dim - 1}")
        occ = []
        for _ in range(self.modes):
            index, m = divmod(index, self.cutoff)
            occ.append(m)
        return tuple(occ)

    def embed(self, factors: dict[int, np.ndarray]) -> np.ndarray:
        """Kronecker placement of single-mode operators at the given
        (0-based) modes, identity everywhere else."""
        eye = np.eye(self.cutoff)
        out = np.ones((1, 1), dtype=complex)
        for mode in reversed(range(self.modes)):
            out = np.kron(out, factors.get(mode, eye))
        return out

    def vacuum(self) -> np.ndarray:
        state = np.zeros(self.dim, dtype=complex)
        state[0] = 1.0
        return state


@dataclass(frozen=True)
class GeneratorMatrix:
    """The Hermitian generator K of the squeezer on the truncated basis."""

    basis: FockBasis
    matrix: np.ndarray


@dataclass(frozen=True)
class FockStateVector:
    """Complex amplitude vector over a truncated multimode Fock basis."""

    basis: FockBasis
    amplitudes: np.ndarray

    @property
    def norm_deficit(self) -> float:
        """1 - |psi|^2.  Near zero for states produced by the (unitary)
        exponential; kept as a tripwire, not as the truncation measure."""
        return 1.0 - float(np.vdot(self.amplitudes, self.amplitudes).real)

    def edge_population(self, margin: int = 2) -> float:
        """Probability mass on basis states with any mode within ``margin``
        levels of the cutoff; the effective truncation diagnostic."""
        d = self.basis.cutoff
        probs = np.abs(self.amplitudes) ** 2
        total = 0.0
        for idx in range(self.basis.dim):
            if max(self.basis.occupations(idx)) >= d - margin:
                total += probs[idx]
        return total


def build_generator(
    params: SqueezeParams, cutoff: int, max_dim: int = DEFAULT_MAX_DIM
) -> GeneratorMatrix:
    """Assemble K = lam * sum_i Q_i P_{i+1 (mod n)} by Kronecker placement."""
    basis = FockBasis(params.n, cutoff)
    if basis.dim > max_dim:
        raise ValueError(
            f"basis dimension {basis.dim} exceeds the memory budget {max_dim}"
        )
    q_op = position_operator(cutoff).astype(complex)
    p_op = momentum_operator(cutoff)
    total = np.zeros((basis.dim, basis.dim), dtype=complex)
    for i in range(params.n):
        total += basis.embed({i: q_op, (i + 1) % params.n: p_op})
    total *= params.lam
    hermiticity = float(np.abs(total - total.conj().T).max())
    if hermiticity > _HERMITICITY_TOL:
        raise ArithmeticError(f"generator not Hermitian: residual {hermiticity:.3e}")
    return GeneratorMatrix(basis, total)


def squeeze_propagator(generator: GeneratorMatrix) -> np.ndarray:
    """The full unitary exp(i*K) via Hermitian eigendecomposition."""
    evals, evecs = np.linalg.eigh(generator.matrix)
    return (evecs * np.exp(1j * evals)) @ evecs.conj().T


def apply_squeeze(generator: GeneratorMatrix) -> FockStateVector:
    """exp(i*K) applied to the vacuum, without forming the full propagator."""
    evals, evecs = np.linalg.eigh(generator.matrix)
    overlaps = evecs[0, :].conj()
    return FockStateVector(
        basis=generator.basis,
        amplitudes=evecs @ (np.exp(1j * evals) * overlaps),
    )


def extract_pair_amplitudes(state: FockStateVector) -> tuple[complex, np.ndarray]:
    """Vacuum amplitude plus the symmetric two-photon amplitude matrix.

    Off-diagonal entries are <1_i 1_j|psi>; diagonal entries carry the
    sqrt(2) two-photon factor, sqrt(2)*<2_i|psi>.  Dividing by the vacuum
    amplitude reproduces the pair-creation coefficient matrix of the
    analytic squeezed vacuum.
    """
    basis = state.basis
    if basis.cutoff < 3:
        raise ValueError("pair extraction needs a cutoff of at least 3")
    n = basis.modes
    vac = complex(state.amplitudes[0])
    pairs = np.zeros((n, n), dtype=complex)
    for i in range(n):
        pairs[i, i] = math.sqrt(2.0) * state.amplitudes[2 * basis.cutoff**i]
        for j in range(i + 1, n):
            amp = state.amplitudes[basis.cutoff**i + basis.cutoff**j]
            pairs[i, j] = amp
            pairs[j, i] = amp
    return vac, pairs


def oracle_variances(
    state: FockStateVector, edge_threshold: float = DEFAULT_EDGE_THRESHOLD
) -> QuadratureVariances:
    """Variances of X1 = sum(Q_i)/sqrt(2n) and X2 = sum(P_i)/sqrt(2n) in the
    given state, built from the truncated operators."""
    edge = state.edge_population()
    if edge > edge_threshold:
        raise ValueError(
            f"truncation edge population {edge:.3e} exceeds {edge_threshold:.0e}; "
            f"increase the photon cutoff"
        )
    basis = state.basis
    scale = 1.0 / math.sqrt(2.0 * basis.modes)
    q_op = position_operator(basis.cutoff).astype(complex)
    p_op = momentum_operator(basis.cutoff)
    x1 = scale * sum(basis.embed({i: q_op}) for i in range(basis.modes))
    x2 = scale * sum(basis.embed({i: p_op}) for i in range(basis.modes))

    psi = state.amplitudes
    variances = []
    for op in (x1, x2):
        applied = op @ psi
        mean = float(np.vdot(psi, applied).real)
        if abs(mean) > _MEAN_TOL:
            raise ArithmeticError(f"quadrature mean {mean:.3e} not zero")
        variances.append(float(np.vdot(applied, applied).real) - mean**2)
    return QuadratureVariances(var_x1=variances[0], var_x2=variances[1])

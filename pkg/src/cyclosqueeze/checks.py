"""Self-verification suite: every analytic identity the package relies on,
run at a caller-chosen (n, lam) and reported as named residuals against
pinned tolerances.

The same list backs the ``verify`` CLI command, the HTTP ``/v1/verify``
endpoint and the test suite, so a regression anywhere shows up as a failing
named check everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import fock
from .circulant import (
    cayley_hamilton_n4,
    cyclic_shift,
    series_expm,
    shift_exponential,
    symmetric_gram,
)
from .squeeze import (
    MAX_POWER,
    SqueezeParams,
    entry_sum_power_identity,
    gram_entry_sum,
    heisenberg_transform,
    normal_ordered_form,
    quadrature_variances,
)
from .wigner import (
    PhasePoint,
    closed_form_n2,
    closed_form_n3,
    closed_form_n4,
    normalization,
    wigner_state,
)

__all__ = ["CheckResult", "run_checks", "default_cutoff"]

# the quadrature normalization check is gated to keep verify fast; the
# product rule has order**n nodes
_MAX_QUADRATURE_MODES = 5

# oracle runs at n >= 3 are memory-bound, so the squeezing strength is kept
# small and the tolerances widened accordingly
_ORACLE_MAX_LAM_MULTIMODE = 0.5

_CLOSED_FORMS = {2: closed_form_n2, 3: closed_form_n3, 4: closed_form_n4}


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float
    passed: bool


def _check(name: str, residual: float, tolerance: float) -> CheckResult:
    residual = float(residual)
    return CheckResult(name, residual, float(tolerance), residual <= tolerance)


def default_cutoff(params: SqueezeParams, max_dim: int = fock.DEFAULT_MAX_DIM) -> int:
    """Photon cutoff policy for oracle runs.

    Two modes: grow the cutoff until the geometric amplitude tail
    tanh(|lam|)**d drops below 1e-8.  More modes: memory dominates, so take
    the largest cutoff whose basis stays within a 1296-dimensional budget.
    """
    if params.n == 2:
        tail = math.tanh(abs(params.lam))
        cutoff = 8
        while tail > 0.0 and tail**cutoff >= 1e-8 and (cutoff + 2) ** 2 <= max_dim:
            cutoff += 2
        return cutoff
    cutoff = 3  # pair extraction needs room for two photons per mode
    while (cutoff + 1) ** params.n <= min(1296, max_dim):
        cutoff += 1
    return cutoff


def _core_checks(params: SqueezeParams) -> list[CheckResult]:
    n, lam = params.n, params.lam
    eye = np.eye(n)
    results = []

    shift = cyclic_shift(n)
    spectral = shift_exponential(n, -lam)
    results.append(
        _check(
            "shift-exponential-series-agreement",
            np.abs(spectral - series_expm(-lam * shift)).max(),
            1e-11,
        )
    )
    results.append(
        _check("shift-exponential-determinant", abs(np.linalg.det(spectral) - 1.0), 1e-12)
    )
    results.append(
        _check(
            "shift-exponential-inverse",
            np.abs(spectral @ shift_exponential(n, lam) - eye).max(),
            1e-11,
        )
    )

    gram = symmetric_gram(n, lam)
    gram_inv = symmetric_gram(n, -lam)
    results.append(_check("gram-inverse-pair", np.abs(gram @ gram_inv - eye).max(), 1e-11))
    results.append(_check("gram-symmetry", np.abs(gram - gram.T).max(), 0.0))

    transform = heisenberg_transform(params)
    results.append(
        _check(
            "heisenberg-symplectic",
            np.abs(transform.position.T @ transform.momentum - eye).max(),
            1e-11,
        )
    )
    results.append(
        _check(
            "heisenberg-determinants",
            max(
                abs(np.linalg.det(transform.position) - 1.0),
                abs(np.linalg.det(transform.momentum) - 1.0),
            ),
            1e-12,
        )
    )

    form = normal_ordered_form(params)
    results.append(
        _check(
            "normal-form-symmetry",
            max(
                np.abs(form.creation - form.creation.T).max(),
                np.abs(form.annihilation - form.annihilation.T).max(),
            ),
            1e-12,
        )
    )
    pair_eigs = np.linalg.eigvalsh(form.creation)
    results.append(_check("pair-coefficient-eigenvalue-bound", np.abs(pair_eigs).max(), 1.0 - 1e-12))
    # normalization of the pure Gaussian state written with a two-photon
    # exponent: prefactor**2 * det(I - C C^T)^(-1/2) must be 1
    closure = form.prefactor**2 * np.linalg.det(eye - form.creation @ form.creation.T) ** (-0.5)
    results.append(_check("state-norm-closure", abs(closure - 1.0), 1e-9))

    var = quadrature_variances(params)
    scale = 1e-10 * max(1.0, math.exp(2.0 * abs(lam)))
    law_residual = max(
        abs(var.var_x1 - math.exp(-2.0 * lam) / 4.0),
        abs(var.var_x2 - math.exp(2.0 * lam) / 4.0),
    )
    results.append(_check("variance-law", law_residual, scale))
    results.append(_check("variance-product", abs(var.product - 1.0 / 16.0), 1e-13))

    entry_sum, inverse_sum = gram_entry_sum(params)
    results.append(
        _check(
            "gram-entry-sums",
            max(
                abs(entry_sum - n * math.exp(-2.0 * lam)),
                abs(inverse_sum - n * math.exp(2.0 * lam)),
            ),
            1e-11,
        )
    )

    power_residual = max(
        abs(lhs - rhs) for lhs, rhs in (entry_sum_power_identity(n, p) for p in range(MAX_POWER + 1))
    )
    results.append(_check("power-entry-sum-identity", power_residual, 0.0))

    state = wigner_state(params)
    origin = PhasePoint(np.zeros(n), np.zeros(n))
    results.append(_check("wigner-origin", abs(state.value(origin) - math.pi ** (-n)), 1e-13))
    if n <= _MAX_QUADRATURE_MODES:
        results.append(_check("wigner-normalization", abs(normalization(state, 8) - 1.0), 1e-8))
    if n in _CLOSED_FORMS:
        closed = _CLOSED_FORMS[n]
        rng = np.random.default_rng(20240 + n)
        worst = 0.0
        for _ in range(100):
            point = PhasePoint(rng.normal(0.0, 0.7, n), rng.normal(0.0, 0.7, n))
            reference = closed(point, lam)
            worst = max(worst, abs(state.value(point) - reference) / reference)
        results.append(_check("wigner-closed-form", worst, 1e-10))

    if n == 2:
        sech, tanh = 1.0 / math.cosh(lam), math.tanh(lam)
        results.append(
            _check(
                "two-mode-normal-form",
                max(
                    abs(form.prefactor - sech),
                    np.abs(form.creation - (-tanh) * shift).max(),
                    np.abs(form.cross - (sech - 1.0) * eye).max(),
                    np.abs(form.annihilation - tanh * shift).max(),
                ),
                1e-12,
            )
        )
    if n == 4:
        expansion = cayley_hamilton_n4(lam)
        ch_residual = max(
            np.abs(expansion.matrix - shift_exponential(4, -lam, transposed=True)).max(),
            np.abs(expansion.matrix.T @ expansion.matrix - gram).max(),
            abs(np.linalg.det(expansion.matrix) - 1.0),
        )
        results.append(_check("cayley-hamilton-quartic", ch_residual, 1e-12))
        tanh = math.tanh(lam)
        pair_ref = np.zeros((4, 4))
        for i, j in ((0, 1), (0, 3), (1, 2), (2, 3)):
            pair_ref[i, j] = pair_ref[j, i] = -tanh / 2.0
        results.append(
            _check(
                "four-mode-vacuum-pattern",
                max(
                    abs(form.prefactor - 1.0 / math.cosh(lam)),
                    np.abs(form.creation - pair_ref).max(),
                    abs(form.denominator_det - math.cosh(lam) ** 2),
                ),
                1e-12,
            )
        )
    return results


def _oracle_checks(
    params: SqueezeParams, cutoff: int, tol: float | None
) -> list[CheckResult]:
    n, lam = params.n, params.lam
    if n >= 3 and abs(lam) > _ORACLE_MAX_LAM_MULTIMODE:
        raise ValueError(
            f"oracle checks with {n} modes need |lam| <= "
            f"{_ORACLE_MAX_LAM_MULTIMODE} (truncation dominates beyond that)"
        )
    pair_tol = tol if tol is not None else (1e-6 if n == 2 else 1e-4)
    var_tol = tol if tol is not None else (1e-6 if n == 2 else 1e-3)

    generator = fock.build_generator(params, cutoff)
    results = [
        _check(
            "oracle-generator-hermitian",
            np.abs(generator.matrix - generator.matrix.conj().T).max(),
            1e-12,
        )
    ]
    state = fock.apply_squeeze(generator)
    results.append(_check("oracle-norm-deficit", abs(state.norm_deficit), 1e-10))

    form = normal_ordered_form(params)
    vac, pairs = fock.extract_pair_amplitudes(state)
    results.append(_check("oracle-vacuum-amplitude", abs(vac - form.prefactor), pair_tol))
    results.append(
        _check("oracle-pair-amplitudes", np.abs(pairs / vac - form.creation).max(), pair_tol)
    )

    var = fock.oracle_variances(state)
    results.append(
        _check(
            "oracle-variances",
            max(
                abs(var.var_x1 - math.exp(-2.0 * lam) / 4.0),
                abs(var.var_x2 - math.exp(2.0 * lam) / 4.0),
            ),
            var_tol,
        )
    )

    if n == 2:
        sech, tanh = 1.0 / math.cosh(lam), math.tanh(lam)
        ladder_residual = max(
            abs(state.amplitudes[generator.basis.index((m, m))] - sech * (-tanh) ** m)
            for m in range(min(11, cutoff))
        )
        results.append(_check("oracle-schmidt-ladder", ladder_residual, pair_tol))
    return results


def run_checks(
    params: SqueezeParams,
    oracle: bool = False,
    cutoff: int | None = None,
    tol: float | None = None,
) -> list[CheckResult]:
    """Run every applicable named check at the given parameters.

    ``oracle`` enables the truncated Fock-space comparisons (cutoff defaults
    to :func:`default_cutoff`); ``tol`` overrides only the truncation-limited
    oracle tolerances, never the pinned analytic ones.
    """
    if tol is not None and not tol > 0.0:
        raise ValueError(f"tolerance override must be positive, got {tol!r}")
    results = _core_checks(params)
    if oracle:
        results.extend(_oracle_checks(params, cutoff or default_cutoff(params), tol))
    return results

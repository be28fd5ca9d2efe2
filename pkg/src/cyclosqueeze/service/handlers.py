"""Request handlers shared by the HTTP routes and the local CLI path.

Each handler is a pure function from a request model to a response model;
the transport layers only serialize.
"""

from __future__ import annotations

import math

import numpy as np
import scipy.linalg

from .. import checks as checks_mod
from ..circulant import symmetric_gram
from ..serialize import render_csv_grid, render_json
from ..squeeze import (
    SqueezeParams,
    entry_sum_power_identity,
    gram_entry_sum,
    heisenberg_transform,
    normal_ordered_form,
    quadrature_variances,
    squeezed_vacuum,
)
from ..wigner import PhasePoint, slice_grid, wigner_state
from . import models

__all__ = [
    "matrices_report",
    "variances_report",
    "state_report",
    "wigner_report",
    "render_wigner",
    "identities_report",
    "verify_report",
]


def _listify(matrix: np.ndarray) -> list[list[float]]:
    return [[float(x) for x in row] for row in matrix]


def matrices_report(request: models.SqueezeRequest) -> models.MatricesResponse:
    params = SqueezeParams(request.n, request.lam)
    transform = heisenberg_transform(params)
    form = normal_ordered_form(params)
    den_inv = scipy.linalg.cho_solve(
        scipy.linalg.cho_factor(form.denominator, lower=True), np.eye(params.n)
    )
    return models.MatricesResponse(
        n=params.n,
        lam=params.lam,
        position_transform=_listify(transform.position),
        momentum_transform=_listify(transform.momentum),
        gram=_listify(symmetric_gram(params.n, params.lam)),
        gram_inverse=_listify(symmetric_gram(params.n, -params.lam)),
        denominator=_listify(form.denominator),
        denominator_inverse=_listify(den_inv),
        denominator_det=form.denominator_det,
        prefactor=form.prefactor,
        creation=_listify(form.creation),
        cross=_listify(form.cross),
        annihilation=_listify(form.annihilation),
    )


def variances_report(request: models.SqueezeRequest) -> models.VariancesResponse:
    params = SqueezeParams(request.n, request.lam)
    var = quadrature_variances(params)
    return models.VariancesResponse(
        n=params.n,
        lam=params.lam,
        var_x1=var.var_x1,
        var_x2=var.var_x2,
        product=var.product,
        reference_var_x1=math.exp(-2.0 * params.lam) / 4.0,
        reference_var_x2=math.exp(2.0 * params.lam) / 4.0,
    )


def state_report(request: models.SqueezeRequest) -> models.StateResponse:
    params = SqueezeParams(request.n, request.lam)
    prefactor, pair = squeezed_vacuum(params)
    return models.StateResponse(
        n=params.n, lam=params.lam, prefactor=prefactor, pair_coefficient=_listify(pair)
    )


def wigner_report(request: models.WignerRequest) -> models.WignerResponse:
    params = SqueezeParams(request.n, request.lam)
    state = wigner_state(params)
    grid = slice_grid(
        state,
        axis_a=request.axis_a,
        axis_b=request.axis_b,
        range_a=(request.min_a, request.max_a),
        range_b=(request.min_b, request.max_b),
        steps_a=request.steps_a,
        steps_b=request.steps_b,
        fixed=request.fixed,
    )
    origin = state.value(PhasePoint(np.zeros(params.n), np.zeros(params.n)))
    return models.WignerResponse(
        n=params.n,
        lam=params.lam,
        axis_a=grid.axis_a,
        axis_b=grid.axis_b,
        min_a=request.min_a,
        max_a=request.max_a,
        steps_a=request.steps_a,
        min_b=request.min_b,
        max_b=request.max_b,
        steps_b=request.steps_b,
        fixed=dict(grid.fixed),
        origin_value=origin,
        rows=list(grid.rows()),
    )


def render_wigner(request: models.WignerRequest) -> tuple[str, str]:
    """Rendered body and media type for a grid request, honoring the
    requested format (grids are the one payload offered as CSV)."""
    report = wigner_report(request)
    if request.format == "csv":
        metadata = {
            "schema_version": report.schema_version,
            "n": report.n,
            "lambda": report.lam,
            "axis_a": report.axis_a,
            "axis_b": report.axis_b,
            "fixed": report.fixed,
        }
        return render_csv_grid(metadata, report.rows), "text/csv"
    return render_json(report), "application/json"


def identities_report(request: models.IdentitiesRequest) -> models.IdentitiesResponse:
    rows = []
    for power in range(request.l_max + 1):
        lhs, rhs = entry_sum_power_identity(request.n, power)
        rows.append(
            models.IdentityRow(power=power, entry_sum=lhs, reference=rhs, exact=lhs == rhs)
        )
    gram_sums = None
    if request.lam is not None:
        params = SqueezeParams(request.n, request.lam)
        entry_sum, inverse_sum = gram_entry_sum(params)
        gram_sums = models.GramSums(
            lam=params.lam,
            entry_sum=entry_sum,
            entry_sum_reference=params.n * math.exp(-2.0 * params.lam),
            inverse_entry_sum=inverse_sum,
            inverse_entry_sum_reference=params.n * math.exp(2.0 * params.lam),
        )
    return models.IdentitiesResponse(n=request.n, rows=rows, gram_sums=gram_sums)


def verify_report(request: models.VerifyRequest) -> models.VerifyResponse:
    params = SqueezeParams(request.n, request.lam)
    cutoff = None
    if request.oracle:
        cutoff = request.cutoff or checks_mod.default_cutoff(params)
    results = checks_mod.run_checks(
        params, oracle=request.oracle, cutoff=cutoff, tol=request.tol
    )
    reports = [
        models.CheckReport(
            name=r.name, residual=r.residual, tolerance=r.tolerance, passed=r.passed
        )
        for r in results
    ]
    return models.VerifyResponse(
        n=params.n,
        lam=params.lam,
        oracle=request.oracle,
        cutoff=cutoff,
        checks=reports,
        passed=all(r.passed for r in results),
    )

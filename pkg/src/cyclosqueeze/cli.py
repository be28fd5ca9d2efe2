"""Command-line client for the squeezer service.

Every subcommand builds the same request model the HTTP API accepts and, by
default, executes it in-process through the shared handlers and renderer.
With ``--server URL`` the request is POSTed to a running service instead;
either way the output bytes are identical for identical flags.
"""

from __future__ import annotations

import json
import sys

import click
from pydantic import ValidationError

from .serialize import render_json
from .service import handlers, models


def _build(model_cls, **kwargs):
    """Construct a request model, condensing validation failures to one line."""
    try:
        return model_cls(**kwargs)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "request"
        raise click.ClickException(f"invalid {location}: {first['msg']}") from exc

_PATHS = {
    "matrices": ("/v1/matrices", handlers.matrices_report),
    "variances": ("/v1/variances", handlers.variances_report),
    "state": ("/v1/state", handlers.state_report),
    "identities": ("/v1/identities", handlers.identities_report),
    "verify": ("/v1/verify", handlers.verify_report),
}


def _execute(server: str | None, command: str, request) -> bytes:
    """Run a request locally or against a remote server; returns body bytes."""
    if command == "wigner":
        path = "/v1/wigner"
    else:
        path, handler = _PATHS[command]
    if server:
        import httpx

        url = server.rstrip("/") + path
        try:
            response = httpx.post(
                url, json=request.model_dump(by_alias=True, mode="json"), timeout=300.0
            )
        except httpx.HTTPError as exc:
            raise click.ClickException(f"request to {url} failed: {exc}") from exc
        if response.status_code != 200:
            raise click.ClickException(
                f"server returned {response.status_code}: {response.text.strip()}"
            )
        return response.content
    try:
        if command == "wigner":
            body, _ = handlers.render_wigner(request)
        else:
            body = render_json(handler(request))
    except (ValueError, ArithmeticError) as exc:
        raise click.ClickException(str(exc)) from exc
    return body.encode()


def _emit(body: bytes, output: str | None) -> None:
    if output and output != "-":
        with open(output, "wb") as fh:
            fh.write(body)
    else:
        sys.stdout.buffer.write(body)
        sys.stdout.buffer.flush()


def _squeeze_options(fn):
    fn = click.option("--n", "n", type=int, required=True, help="Mode count (>= 2).")(fn)
    fn = click.option(
        "--lambda", "lam", type=float, required=True, help="Squeezing parameter."
    )(fn)
    return fn


_output_option = click.option(
    "--output", type=click.Path(dir_okay=False, writable=True), default=None,
    help="Write the report to this path instead of stdout.",
)


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Send requests to a running service instead of computing locally.")
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Cyclic n-mode squeezing operator toolkit."""
    ctx.obj = server


@main.command()
@_squeeze_options
@_output_option
@click.pass_obj
def matrices(server: str | None, n: int, lam: float, output: str | None) -> None:
    """Transform matrices, gram pair and normal-ordered coefficients."""
    request = _build(models.SqueezeRequest, n=n, lam=lam)
    _emit(_execute(server, "matrices", request), output)


@main.command()
@_squeeze_options
@_output_option
@click.pass_obj
def variances(server: str | None, n: int, lam: float, output: str | None) -> None:
    """Collective quadrature variances next to their analytic references."""
    request = _build(models.SqueezeRequest, n=n, lam=lam)
    _emit(_execute(server, "variances", request), output)


@main.command()
@_squeeze_options
@_output_option
@click.pass_obj
def state(server: str | None, n: int, lam: float, output: str | None) -> None:
    """Squeezed vacuum: prefactor and pair-creation coefficient matrix."""
    request = _build(models.SqueezeRequest, n=n, lam=lam)
    _emit(_execute(server, "state", request), output)


@main.command()
@_squeeze_options
@click.option("--axis-a", default="q1", show_default=True, help="First sweep coordinate.")
@click.option("--axis-b", default="q2", show_default=True, help="Second sweep coordinate.")
@click.option("--min-a", type=float, default=-3.0, show_default=True)
@click.option("--max-a", type=float, default=3.0, show_default=True)
@click.option("--steps-a", type=int, default=41, show_default=True)
@click.option("--min-b", type=float, default=-3.0, show_default=True)
@click.option("--max-b", type=float, default=3.0, show_default=True)
@click.option("--steps-b", type=int, default=41, show_default=True)
@click.option("--fixed", "fixed", multiple=True, metavar="COORD=VALUE",
              help="Pin a non-swept coordinate, e.g. --fixed p1=0.5 (default 0).")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
              show_default=True, help="Grids are the one payload also offered as CSV.")
@_output_option
@click.pass_obj
def wigner(server, n, lam, axis_a, axis_b, min_a, max_a, steps_a,
           min_b, max_b, steps_b, fixed, fmt, output) -> None:
    """Wigner function on a 2-D phase-space slice."""
    pins: dict[str, float] = {}
    for item in fixed:
        name, _, value = item.partition("=")
        if not _ or not name:
            raise click.UsageError(f"--fixed expects COORD=VALUE, got {item!r}")
        try:
            pins[name] = float(value)
        except ValueError:
            raise click.UsageError(f"--fixed value for {name!r} is not a number: {value!r}")
    request = _build(
        models.WignerRequest,
        n=n, lam=lam, axis_a=axis_a, axis_b=axis_b,
        min_a=min_a, max_a=max_a, steps_a=steps_a,
        min_b=min_b, max_b=max_b, steps_b=steps_b,
        fixed=pins, format=fmt,
    )
    _emit(_execute(server, "wigner", request), output)


@main.command()
@click.option("--n", "n", type=int, required=True, help="Mode count (>= 2).")
@click.option("--l-max", type=int, default=12, show_default=True,
              help="Largest power of the coupling matrix to check.")
@click.option("--lambda", "lam", type=float, default=None,
              help="Also check the gram entry sums at this squeezing.")
@_output_option
@click.pass_obj
def identities(server, n, l_max, lam, output) -> None:
    """Exact entry-sum identities of the cyclic coupling matrix."""
    request = _build(models.IdentitiesRequest, n=n, l_max=l_max, lam=lam)
    _emit(_execute(server, "identities", request), output)


@main.command()
@_squeeze_options
@click.option("--oracle", is_flag=True, help="Include truncated Fock-space cross checks.")
@click.option("--cutoff", type=int, default=None,
              help="Photons per mode for the oracle (defaults to an automatic policy).")
@click.option("--tol", type=float, default=None,
              help="Override the truncation-limited oracle tolerances only.")
@_output_option
@click.pass_obj
def verify(server, n, lam, oracle, cutoff, tol, output) -> None:
    """Run every applicable named check; exits nonzero if any fails."""
    request = _build(models.VerifyRequest, n=n, lam=lam, oracle=oracle, cutoff=cutoff, tol=tol)
    body = _execute(server, "verify", request)
    _emit(body, output)
    if not json.loads(body)["passed"]:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("cyclosqueeze.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()

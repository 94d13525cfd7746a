"""Command-line front end.

Every subcommand is a thin client of the HTTP service: by default the
requests go to an in-process instance of the app (no server needed),
and ``--url`` points them at a running deployment instead.  Exit codes:
0 success, 1 usage, 2 hypothesis violated, 3 no multiplier exists,
4 internal error or failed verification.
"""

from __future__ import annotations

import json
import sys

import click
import httpx

# the service contract reserves 1 for usage errors
click.exceptions.UsageError.exit_code = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_NO_MULTIPLIER = 3
EXIT_INTERNAL = 4

_ERROR_EXIT_CODES = {
    "HypothesisViolated": EXIT_HYPOTHESIS,
    "NegativeA": EXIT_HYPOTHESIS,
    "NoMultiplier": EXIT_NO_MULTIPLIER,
}


def _client(url: str | None):
    if url:
        return httpx.Client(base_url=url, timeout=None)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import create_app

    return TestClient(create_app())


def _post(ctx, path: str, payload: dict) -> dict:
    client = _client(ctx.obj.get("url"))
    try:
        resp = client.post(path, json=json.loads(json.dumps(payload)))
    except httpx.HTTPError as exc:
        click.echo(f"transport error: {exc}", err=True)
        sys.exit(EXIT_INTERNAL)
    if resp.status_code == 422 and "error" in resp.json():
        body = resp.json()
        click.echo(f"{body['error']}: {body['detail']}", err=True)
        sys.exit(_ERROR_EXIT_CODES.get(body["error"], EXIT_INTERNAL))
    if resp.status_code == 422:
        click.echo(resp.text, err=True)
        sys.exit(EXIT_USAGE)
    if resp.status_code != 200:
        click.echo(resp.text, err=True)
        sys.exit(EXIT_INTERNAL)
    return resp.json()


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        click.echo(text)


@click.group()
@click.option("--url", default=None, help="Base URL of a running service; in-process if omitted.")
@click.pass_context
def cli(ctx, url):
    """Construct and verify evaluation codes on rational ruled surfaces."""
    ctx.ensure_object(dict)
    ctx.obj["url"] = url


@cli.command()
@click.option("--q", type=int, required=True)
@click.option("--e", type=int, required=True)
@click.option("--a", type=int, required=True)
@click.option("--b", type=int, required=True)
@click.option(
    "--variant",
    type=click.Choice(["projective", "affine", "dual-projective", "dual-affine"]),
    default="projective",
)
@click.option("--basis", type=click.Choice(["SF", "sigma"]), default="SF")
@click.option("--output", default=None, help="Write to file instead of stdout.")
@click.pass_context
def code(ctx, q, e, a, b, variant, basis, output):
    """Emit the canonical generator matrix of a surface code."""
    if a < 0 or b < 0 or e < 0 or q < 2:
        raise click.UsageError("q >= 2 and e, a, b >= 0 required")
    body = _post(ctx, "/code", {"q": q, "e": e, "a": a, "b": b, "variant": variant, "basis": basis})
    header = f"n={body['n']} k={body['k']}"
    if body.get("formula_k") is not None:
        header += f" formula_k={body['formula_k']}"
    if body.get("formula_d") is not None:
        header += f" d={body['formula_d']}"
    _emit(header + "\n" + body["matrix"], output)


@cli.command()
@click.option("--q", type=int, required=True)
@click.option("--e", type=int, required=True)
@click.option("--a", type=int, required=True)
@click.option("--b", type=int, required=True)
@click.pass_context
def params(ctx, q, e, a, b):
    """Closed-form parameters, where the formulas' hypotheses hold."""
    if a < 0 or b < 0 or e < 0 or q < 2:
        raise click.UsageError("q >= 2 and e, a, b >= 0 required")
    body = _post(ctx, "/params", {"q": q, "e": e, "a": a, "b": b})
    click.echo(json.dumps(body, indent=2))


@cli.command()
@click.option("--q", "q_list", type=int, multiple=True, default=(2, 3, 4))
@click.option("--e", "e_list", type=int, multiple=True, default=(0, 1, 2, 3))
@click.option("--suite", "suites", multiple=True, help="Run only the named suites.")
@click.option("--seed", type=int, default=0)
@click.option("--budget", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--output", default=None)
@click.pass_context
def verify(ctx, q_list, e_list, suites, seed, budget, fmt, output):
    """Run verification sweeps; nonzero exit iff any row fails."""
    payload = {
        "q_list": list(q_list),
        "e_list": list(e_list),
        "seed": seed,
        "budget": budget,
        "suites": list(suites) or None,
    }
    body = _post(ctx, "/verify", payload)
    rows = body["rows"]
    if not rows:
        click.echo("warning: empty grid, vacuous pass", err=True)
    if fmt == "json":
        _emit(json.dumps(rows, indent=2), output)
    else:
        from .verify import CSV_COLUMNS

        lines = [",".join(CSV_COLUMNS)]
        for r in rows:
            lines.append(",".join(str(r[c]) for c in CSV_COLUMNS))
        _emit("\n".join(lines), output)
    click.echo(
        f"total={body['total']} failed={body['failed']} "
        f"skipped={body['skipped']} absent={body['absent']}",
        err=True,
    )
    if body["failed"]:
        sys.exit(EXIT_INTERNAL)


@cli.command()
@click.option("--q", type=int, required=True)
@click.option("--e", type=int, required=True)
@click.option(
    "--construction",
    type=click.Choice(["injective", "max", "simplified", "orthogonal"]),
    required=True,
)
@click.option("--m", type=int, default=None)
@click.option("--a1", type=int, default=None)
@click.option("--b1", type=int, default=None)
@click.option("--a2", type=int, default=None)
@click.option("--b2", type=int, default=None)
@click.option("--seed", type=int, default=0)
@click.option("--budget", type=int, default=None)
@click.pass_context
def css(ctx, q, e, construction, m, a1, b1, a2, b2, seed, budget):
    """Assemble a CSS quantum code and print its JSON record."""
    payload = {
        "q": q, "e": e, "construction": construction, "m": m,
        "a1": a1, "b1": b1, "a2": a2, "b2": b2, "seed": seed, "budget": budget,
    }
    body = _post(ctx, "/css", payload)
    click.echo(json.dumps(body, indent=2))


@cli.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


def main():
    cli(prog_name="hirzcodes")


if __name__ == "__main__":
    main()

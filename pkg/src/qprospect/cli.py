"""Command-line client for the decision engine.

A thin wrapper over the service layer: each subcommand builds the same
payload the HTTP endpoints return, either in-process (default) or from a
running server via --url.  Human-readable tables round to 6 decimals;
--json emits the payload at full precision.

Exit codes: 0 success, 1 internal error, 2 validation error,
3 degenerate lattice (strategic state orthogonal to every prospect).
"""

from __future__ import annotations

import sys

import click

from .errors import (
    DegenerateLatticeError,
    ProblemSemanticError,
    QProspectError,
    ValidationError,
)
from .service import core

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2
EXIT_DEGENERATE = 3


def _read_problem(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise ValidationError(f"cannot read problem file {path!r}: {e}") from None


def _fetch(url: str, endpoint: str, text: str, params: dict | None = None) -> dict:
    """Ask a running service instead of computing in-process."""
    import json

    import httpx

    body = json.loads(text)
    if params:
        body.update(params)
    resp = httpx.post(f"{url.rstrip('/')}/{endpoint}", json=body, timeout=60.0)
    data = resp.json()
    if resp.status_code == 409:
        raise DegenerateLatticeError(data.get("error", "degenerate lattice"))
    if resp.status_code == 422:
        raise ValidationError(data.get("error", str(data)))
    if resp.status_code != 200:
        raise QProspectError(f"server error {resp.status_code}: {data}")
    return data


def _run(fn) -> int:
    """Execute a command body, mapping engine errors to exit codes."""
    try:
        fn()
        return EXIT_OK
    except DegenerateLatticeError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_DEGENERATE
    except ProblemSemanticError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_VALIDATION
    except ValidationError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_VALIDATION
    except QProspectError as e:
        click.echo(f"internal error: {e}", err=True)
        return EXIT_INTERNAL


def _decision_table(payload: dict, raw: bool = True):
    hdr = f"{'#':>3} {'name':<16} {'p':>10} {'p0':>10} {'q':>10}"
    if raw:
        hdr += f" {'raw_p':>10} {'raw_p0':>10} {'raw_q':>10}"
    click.echo(hdr)
    for row in payload["prospects"]:
        line = (
            f"{row['index']:>3} {row['name']:<16} "
            f"{row['p']:>10.6f} {row['p0']:>10.6f} {row['q']:>10.6f}"
        )
        if raw:
            line += (
                f" {row['raw_p']:>10.6f} {row['raw_p0']:>10.6f} "
                f"{row['raw_q']:>10.6f}"
            )
        click.echo(line)
    click.echo(f"ordering: {payload['relations']}")
    click.echo(
        f"optimal: prospect {payload['optimal']} ({payload['optimal_name']})"
    )
    if len(payload["ties"]) > 1:
        click.echo(f"ties: {payload['ties']}")


problem_arg = click.argument("problem", type=str)
json_flag = click.option(
    "--json", "as_json", is_flag=True, help="Machine-readable output, full precision."
)
url_opt = click.option(
    "--url", default=None, help="Base URL of a running qprospect server."
)


@click.group()
def main():
    """Interference-aware prospect ranking engine."""


@main.command()
@problem_arg
@json_flag
@url_opt
def validate(problem, as_json, url):
    """Parse and validate a problem document."""

    def body():
        text = _read_problem(problem)
        if url:
            payload = _fetch(url, "validate", text)
        else:
            payload = core.validate_payload(core.load(text))
        if as_json:
            click.echo(core.to_json(payload))
        else:
            click.echo(
                f"valid: {payload['actions']} action(s), dims {payload['dims']}, "
                f"total dim {payload['total_dim']}, "
                f"{payload['prospects']} prospect(s)"
            )

    sys.exit(_run(body))


@main.command()
@problem_arg
@json_flag
@url_opt
def enumerate(problem, as_json, url):
    """List the basic states with their flat indices."""

    def body():
        text = _read_problem(problem)
        if url:
            payload = _fetch(url, "enumerate", text)
        else:
            payload = core.enumerate_payload(core.load(text))
        if as_json:
            click.echo(core.to_json(payload))
        else:
            for entry in payload["basis"]:
                nu = ",".join(str(v) for v in entry["multi_index"])
                modes = " & ".join(entry["modes"])
                click.echo(f"{entry['flat']:>4}  ({nu})  {modes}")

    sys.exit(_run(body))


@main.command()
@problem_arg
@json_flag
@url_opt
def solve(problem, as_json, url):
    """Decompose, rank, and report the optimal prospect."""

    def body():
        text = _read_problem(problem)
        if url:
            payload = _fetch(url, "solve", text)
        else:
            payload = core.solve_payload(core.load(text))
        if as_json:
            click.echo(core.to_json(payload))
        else:
            _decision_table(payload, raw=False)

    sys.exit(_run(body))


@main.command()
@problem_arg
@json_flag
@url_opt
def decompose(problem, as_json, url):
    """Full p/p0/q table, raw and normalized."""

    def body():
        text = _read_problem(problem)
        if url:
            payload = _fetch(url, "decompose", text)
        else:
            payload = core.solve_payload(core.load(text))
        if as_json:
            click.echo(core.to_json(payload))
        else:
            _decision_table(payload, raw=True)

    sys.exit(_run(body))


@main.command()
@problem_arg
@json_flag
@url_opt
@click.option("--shots", type=int, default=None, help="Override the document's shots.")
@click.option("--seed", type=int, default=None, help="Override the sampler seed.")
def sample(problem, as_json, url, shots, seed):
    """Run the full pipeline, with finite-shot measurement when shots > 0."""

    def body():
        text = _read_problem(problem)
        if url:
            params = {}
            if shots is not None:
                params["shots_override"] = shots
            if seed is not None:
                params["seed_override"] = seed
            payload = _fetch(url, "sample", text, params)
        else:
            payload = core.sample_payload(core.load(text), shots=shots, seed=seed)
        if as_json:
            click.echo(core.to_json(payload))
            return
        _decision_table(payload, raw=False)
        if "counts" in payload and payload["counts"] is not None:
            click.echo(f"shots: {payload['shots']} (seed {payload['seed']})")
            for row, cnt, freq in zip(
                payload["prospects"], payload["counts"], payload["frequencies"]
            ):
                click.echo(f"{row['index']:>3} {row['name']:<16} {cnt:>8} {freq:>10.6f}")
            click.echo(f"empirical winner: prospect {payload['empirical_chosen']}")
        click.echo(f"output state: {payload['output_state']['name']}")

    sys.exit(_run(body))


@main.command()
@problem_arg
@json_flag
@url_opt
def explain(problem, as_json, url):
    """Per-prospect interference breakdown over basis-index pairs."""

    def body():
        text = _read_problem(problem)
        if url:
            payload = _fetch(url, "explain", text)
        else:
            payload = core.explain_payload(core.load(text))
        if as_json:
            click.echo(core.to_json(payload))
            return
        _decision_table(payload, raw=True)
        for row in payload["prospects"]:
            terms = row.get("interference_terms") or []
            if not terms:
                continue
            click.echo(f"interference terms for prospect {row['index']} ({row['name']}):")
            for t in terms:
                click.echo(f"  ({t['m']},{t['n']})  {t['value']:>+12.6f}")

    sys.exit(_run(body))


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Start the HTTP service."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()

"""``engage-rank`` — thin client for the pipeline service.

Every subcommand speaks HTTP to the FastAPI app: against ``--server URL``
when given, otherwise against an in-process ASGI transport (no daemon
needed for local runs).  Exit codes: 0 success, 2 input error, 3 backend
error, 4 missing upstream stage.
"""
from __future__ import annotations

import json
import sys

import click
import httpx

from .service import create_app

DEFAULT_TIMEOUT = 300.0


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=DEFAULT_TIMEOUT)
    transport = httpx.ASGITransport(app=create_app())
    return httpx.Client(transport=transport, base_url="http://engage-rank.local",
                        timeout=DEFAULT_TIMEOUT)


def _call(server: str | None, path: str, payload: dict) -> dict:
    try:
        with _client(server) as client:
            response = client.post(path, json=payload)
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(3)
    if response.status_code == 400:
        body = response.json()
        click.echo(f"error: {body.get('error', 'unknown')}", err=True)
        sys.exit(body.get("exit_code", 2))
    if response.status_code == 422:
        click.echo(f"error: invalid request: {response.text}", err=True)
        sys.exit(2)
    if response.status_code != 200:
        click.echo(f"error: service returned HTTP {response.status_code}: {response.text}", err=True)
        sys.exit(3)
    return response.json()


def _common_options(fn):
    fn = click.option("--data-dir", default="data", show_default=True,
                      help="bundled dataset directory")(fn)
    fn = click.option("--snapshot", "snapshot_dir", default="data/snapshot", show_default=True,
                      help="social-graph snapshot directory")(fn)
    fn = click.option("--out", "out_dir", default="out", show_default=True,
                      help="pipeline output directory")(fn)
    fn = click.option("--subset", default="all", show_default=True,
                      type=click.Choice(["all", "top50", "top100", "two-or-more", "power5"]))(fn)
    fn = click.option("--backend", default="offline", show_default=True,
                      type=click.Choice(["offline", "live"]))(fn)
    fn = click.option("--dedup", is_flag=True, help="also emit the deduplicated follower diagnostic")(fn)
    fn = click.option("--server", default=None, help="remote service URL (default: in-process)")(fn)
    return fn


def _payload(data_dir, snapshot_dir, out_dir, subset, backend, dedup) -> dict:
    return {
        "data_dir": data_dir, "snapshot_dir": snapshot_dir, "out_dir": out_dir,
        "subset": subset, "backend": backend, "dedup": dedup,
    }


@click.group()
def main():
    """University engagement ranking pipeline."""


def _stage_command(stage: str, blurb: str):
    @main.command(name=stage, help=blurb)
    @_common_options
    def command(data_dir, snapshot_dir, out_dir, subset, backend, dedup, server):
        body = _call(server, f"/pipeline/{stage}",
                     _payload(data_dir, snapshot_dir, out_dir, subset, backend, dedup))
        summary = body.get("summary", {})
        click.echo(json.dumps(summary, indent=2, sort_keys=True))
        if stage == "ingest" and "total" in summary:
            click.echo(f"Total {summary['total']}")
    return command


_stage_command("ingest", "Parse the dataset and print the list-membership report.")
_stage_command("mine", "Discover official accounts from homepage snapshots.")
_stage_command("crawl", "Accumulate follower counts for discovered accounts (resumable).")
_stage_command("score", "Build the UTE/ARR/EEE score tables.")
_stage_command("correlate", "Compute tau-b correlation matrices for the chosen subset.")
_stage_command("report", "Emit scatter data, top-15 tables and the conference summary.")


@main.command()
@_common_options
def scores(data_dir, snapshot_dir, out_dir, subset, backend, dedup, server):
    """Print the combined score table as JSON."""
    body = _call(server, "/results/scores",
                 _payload(data_dir, snapshot_dir, out_dir, subset, backend, dedup))
    click.echo(json.dumps(body, indent=2, sort_keys=True))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host, port):
    """Run the pipeline service."""
    import uvicorn

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()

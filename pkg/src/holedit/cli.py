"""Command-line front end: type checking, script replay, metatheory
fuzzing, witness generation, and launching the HTTP service.

All commands except `serve` run the engine in-process; `serve` hosts the
same engine behind the HTTP API.
"""

from __future__ import annotations

import os
import sys
from typing import Optional

import click

from .actions import is_error, perform_syn_iter
from .lang import EMPTY_CTX, HOLE, Ctx, EmptyHole, analyze, synthesize
from .metatheory import (
    GenConfig,
    construct_witness_syn,
    fuzz_determinism,
    fuzz_move_invariance,
    fuzz_sensibility,
    reachability_witness,
)
from .textio import (
    ParseError,
    parse_ctx,
    parse_hexp,
    parse_htyp,
    parse_script,
    parse_zexp,
    print_htyp,
    print_script,
    print_zexp,
)
from .zipper import CursorE, erase_exp


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _load_ctx(path: Optional[str]) -> Ctx:
    if path is None:
        return EMPTY_CTX
    ctx = parse_ctx(_read(path))
    if isinstance(ctx, ParseError):
        click.echo(f"context parse error: {ctx}", err=True)
        sys.exit(2)
    return ctx


@click.group()
def main() -> None:
    """Typed-holes structure editor: checker, replayer, fuzzers, service."""


@main.command()
@click.argument("file", type=click.Path(exists=True))
@click.option("--ctx", "ctx_file", type=click.Path(exists=True), default=None)
@click.option("--ana", "ana_typ", default=None, help="analyze against this type")
def check(file: str, ctx_file: Optional[str], ana_typ: Optional[str]) -> None:
    """Type-check a term file (.hz); exit 0 ok, 1 negative verdict, 2 parse error."""
    ctx = _load_ctx(ctx_file)
    e = parse_hexp(_read(file))
    if isinstance(e, ParseError):
        click.echo(f"parse error: {e}", err=True)
        sys.exit(2)
    if ana_typ is not None:
        t = parse_htyp(ana_typ)
        if isinstance(t, ParseError):
            click.echo(f"type parse error: {t}", err=True)
            sys.exit(2)
        if analyze(ctx, e, t):
            click.echo(f"analyzes against {print_htyp(t)}")
            sys.exit(0)
        click.echo(f"does not analyze against {print_htyp(t)}")
        sys.exit(1)
    t = synthesize(ctx, e)
    if t is None:
        click.echo("does not synthesize")
        sys.exit(1)
    click.echo(f"synthesizes {print_htyp(t)}")


@main.command()
@click.argument("script", type=click.Path(exists=True))
@click.option("--init", "init_file", type=click.Path(exists=True), default=None)
@click.option("--ctx", "ctx_file", type=click.Path(exists=True), default=None)
@click.option("--trace", is_flag=True, help="print every intermediate state")
def replay(
    script: str, init_file: Optional[str], ctx_file: Optional[str], trace: bool
) -> None:
    """Replay an action script (.hza); exit 0, or 3 with the failing index."""
    ctx = _load_ctx(ctx_file)
    actions = parse_script(_read(script))
    if isinstance(actions, ParseError):
        click.echo(f"script parse error: {actions}", err=True)
        sys.exit(2)
    if init_file is not None:
        z = parse_zexp(_read(init_file))
        if isinstance(z, ParseError):
            click.echo(f"initial-state parse error: {z}", err=True)
            sys.exit(2)
    else:
        z = CursorE(EmptyHole())
    t = synthesize(ctx, erase_exp(z))
    if t is None:
        click.echo("initial state is not well typed", err=True)
        sys.exit(2)
    if trace:
        click.echo(print_zexp(z))
    for i, a in enumerate(actions):
        r = perform_syn_iter(ctx, z, t, [a])
        if is_error(r[0]):
            click.echo(f"action {i} failed: {type(r[0]).__name__}", err=True)
            sys.exit(3)
        z, t = r
        if trace:
            click.echo(print_zexp(z))
    click.echo(f"final type: {print_htyp(t)}")


@main.command()
@click.argument(
    "kind", type=click.Choice(["sensibility", "movement", "determinism"])
)
@click.option("--seed", default=0, type=int)
@click.option("--count", default=1000, type=int)
@click.option("--len", "max_len", default=50, type=int)
def fuzz(kind: str, seed: int, count: int, max_len: int) -> None:
    """Run a metatheory fuzzer; nonzero exit on any violation."""
    cfg = GenConfig(seed=seed)
    if kind == "sensibility":
        report = fuzz_sensibility(cfg, count, max_len)
    elif kind == "movement":
        report = fuzz_move_invariance(cfg, count)
    else:
        report = fuzz_determinism(cfg, count)
    if report.failures:
        for f in report.failures:
            click.echo(
                f"violation of {f.prop} at index {f.index}: "
                f"{print_zexp(f.initial)} ; {print_script(f.actions)!r}",
                err=True,
            )
        sys.exit(1)
    click.echo(f"{report.cases_run} ok")


@main.command()
@click.argument("kind", type=click.Choice(["reach", "construct"]))
@click.argument("files", nargs=-1, type=click.Path(exists=True))
@click.option("--ctx", "ctx_file", type=click.Path(exists=True), default=None)
def witness(kind: str, files: tuple, ctx_file: Optional[str]) -> None:
    """Emit a witness script: `reach FROM TO` (cursored terms with equal
    erasures) or `construct TERM` (a synthesizing term)."""
    ctx = _load_ctx(ctx_file)
    if kind == "reach":
        if len(files) != 2:
            click.echo("witness reach needs FROM and TO files", err=True)
            sys.exit(2)
        frm = parse_zexp(_read(files[0]))
        to = parse_zexp(_read(files[1]))
        for v in (frm, to):
            if isinstance(v, ParseError):
                click.echo(f"parse error: {v}", err=True)
                sys.exit(2)
        w = reachability_witness(frm, to)
        if w is None:
            click.echo("erasures differ: no witness exists", err=True)
            sys.exit(1)
        click.echo(print_script(w), nl=False)
        return
    if len(files) != 1:
        click.echo("witness construct needs one TERM file", err=True)
        sys.exit(2)
    e = parse_hexp(_read(files[0]))
    if isinstance(e, ParseError):
        click.echo(f"parse error: {e}", err=True)
        sys.exit(2)
    if synthesize(ctx, e) is None:
        click.echo("term does not synthesize: no witness", err=True)
        sys.exit(1)
    click.echo(print_script(construct_witness_syn(ctx, e)), nl=False)


@main.command()
@click.option("--port", default=None, type=int, help="default $HZ_PORT or 8787")
@click.option("--host", default="127.0.0.1")
def serve(port: Optional[int], host: str) -> None:
    """Run the HTTP edit-session service."""
    import uvicorn

    from .server import app

    if port is None:
        port = int(os.environ.get("HZ_PORT", "8787"))
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()

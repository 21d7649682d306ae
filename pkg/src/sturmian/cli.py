"""Command-line surface: word / repr / pal / witness subcommands.

Exit codes: 0 success, 1 usage or parse error, 2 domain error (rewrite
not applicable, not a palindrome, insufficient directive, ...), 3 budget
exceeded.  Data goes to stdout, diagnostics to stderr.  The symbol budget
can be overridden with the STURMIAN_BUDGET environment variable.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from dataclasses import dataclass

import click

from . import numeration, pal_length, palindromes, transforms
from .errors import BudgetExceeded, DomainError, ParseError
from .words import DEFAULT_BUDGET, DirectiveSequence, WordFamily

BUDGET_ENV = "STURMIAN_BUDGET"


@dataclass
class CliConfig:
    budget: int
    output: str
    seed: int


def _family(directive_text: str, budget: int) -> WordFamily:
    return WordFamily(DirectiveSequence.parse(directive_text), budget=budget)


@click.group()
@click.option(
    "--budget",
    type=int,
    default=None,
    help=f"Symbol budget (default {DEFAULT_BUDGET}; env {BUDGET_ENV} overrides).",
)
@click.option(
    "--output",
    type=click.Choice(["plain", "json", "csv"]),
    default="plain",
    show_default=True,
)
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed for randomized commands.")
@click.pass_context
def cli(ctx, budget, output, seed):
    """Sturmian numeration toolbox: characteristic words, valid
    representations, palindrome pairs and palindromic-length witnesses."""
    if budget is None:
        budget = int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))
    ctx.obj = CliConfig(budget=budget, output=output, seed=seed)


@cli.command()
@click.argument("directive")
@click.option("--length", "-n", type=int, required=True, help="Prefix length.")
@click.pass_obj
def word(cfg: CliConfig, directive, length):
    """Print the characteristic-word prefix w(0..LENGTH]."""
    fam = _family(directive, cfg.budget)
    text = fam.prefix(length).decode("ascii")
    if cfg.output == "json":
        click.echo(json.dumps({"directive": directive, "length": length, "word": text}))
    else:
        click.echo(text)


@cli.command(name="repr")
@click.argument("directive")
@click.argument("n", type=int)
@click.option(
    "--mode",
    type=click.Choice(["ostrowski", "enumerate", "normalize"]),
    default="ostrowski",
    show_default=True,
)
@click.argument("digits", required=False)
@click.pass_obj
def repr_cmd(cfg: CliConfig, directive, n, mode, digits):
    """Representations of N: greedy Ostrowski, the full valid set, or a
    normalization trace for the given DIGITS."""
    fam = _family(directive, cfg.budget)
    if mode == "ostrowski":
        r = numeration.ostrowski(fam, n)
        if cfg.output == "json":
            click.echo(json.dumps(numeration.to_json(fam, r)))
        else:
            click.echo(r.text())
    elif mode == "enumerate":
        reps = sorted(numeration.enumerate_valid(fam, n), key=lambda r: r.msf())
        if cfg.output == "json":
            click.echo(json.dumps([numeration.to_json(fam, r) for r in reps]))
        elif cfg.output == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf)
            writer.writerow(["digits", "value"])
            for r in reps:
                writer.writerow([r.text(), n])
            click.echo(buf.getvalue(), nl=False)
        else:
            for r in reps:
                click.echo(r.text())
    else:
        if digits is None:
            raise click.UsageError("mode 'normalize' needs a DIGITS argument")
        r = numeration.Representation.parse(digits)
        trace = transforms.normalize(fam, r)
        if cfg.output == "json":
            click.echo(json.dumps(transforms.trace_to_json(fam, trace)))
        else:
            cur = trace.start
            line = [cur.text()]
            for step in trace.steps:
                cur = transforms.apply_step(fam, cur, step)
                line.append(f"--{step.kind.value}_{step.position}-->")
                line.append(cur.text())
            click.echo(" ".join(line))


@cli.command()
@click.argument("directive")
@click.argument("p1", type=int)
@click.argument("p2", type=int)
@click.pass_obj
def pal(cfg: CliConfig, directive, p1, p2):
    """Maximal extension and representation pair for the palindrome
    w(P1..P2]."""
    fam = _family(directive, cfg.budget)
    occ = palindromes.maximal_extension(fam, p1, p2)
    pair = palindromes.palindrome_repr_pair(fam, p1, p2)
    doc = palindromes.occurrence_to_json(fam, occ, pair)
    if cfg.output == "json":
        click.echo(json.dumps(doc))
    else:
        click.echo(
            f"w({p1}..{p2}] extends to w({occ.ext_left}..{occ.ext_right}] "
            f"= c({occ.central_n},{occ.central_j})"
        )
        click.echo(f"r1 = {pair.r1.text()}  r2 = {pair.r2.text()}  m = {pair.m}")


@cli.command()
@click.argument("directive")
@click.argument("q", type=int)
@click.option("--verify", is_flag=True, help="Also compute the palindromic length.")
@click.pass_obj
def witness(cfg: CliConfig, directive, q, verify):
    """Build (and optionally verify) the unboundedness witness for Q."""
    fam = _family(directive, cfg.budget)
    spec = pal_length.build_witness(fam, q)
    report = pal_length.verify_witness(fam, spec) if verify else None

    if cfg.output == "json":
        doc = report.to_json() if report else spec.to_json()
        click.echo(json.dumps(doc))
    elif cfg.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["Q", "N", "positions", "pal_len", "runtime_ms"])
        writer.writerow(
            [
                spec.Q,
                spec.N,
                " ".join(str(p) for p in spec.positions),
                report.pal_len if report else "",
                f"{report.runtime_ms:.3f}" if report else "",
            ]
        )
        click.echo(buf.getvalue(), nl=False)
    else:
        click.echo(
            f"Q={spec.Q} N={spec.N} positions={','.join(str(p) for p in spec.positions)} "
            f"digits={spec.representation.text()}"
        )
        if report:
            click.echo(
                f"pal_len={report.pal_len} (> {spec.Q}) runtime_ms={report.runtime_ms:.3f}"
            )


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as e:
        return e.exit_code
    except (click.UsageError, ParseError) as e:
        click.echo(f"error: {e}", err=True)
        return 1
    except BudgetExceeded as e:
        click.echo(f"budget exceeded: {e}", err=True)
        return 3
    except DomainError as e:
        click.echo(f"error: {e}", err=True)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

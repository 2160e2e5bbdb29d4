"""
Command Line Interface
JSON in, JSON out front end for classification, factorization, elimination quantities, starlikeness and the verification suites
"""

import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Callable, List, Literal, Optional, Tuple

import click
from pydantic import BaseModel, Field

from .cone import Classification, classify
from .config import get_settings
from .elim import discriminant, dis2, mobius_discriminant, resultant
from .errors import InputError, PreconditionError, TrigConeError, VerificationError
from .schemas import (
    Mode,
    PolyDocument,
    ResultantDocument,
    ScalarDocument,
    StarlikeDocument,
    TrigPolyDocument,
    VerdictDocument,
    VerifyDocument,
    dump,
    dump_scalar,
    load,
)
from .starlike import is_starlike
from .verify import DEFAULT_SUITES, SUITES, run_suites

logger = logging.getLogger(__name__)

Command = Literal[
    "check", "factor", "dis2", "resultant", "discriminant", "mobius", "starlike", "verify", "examples"
]

EXIT_OK = 0


class JobSpec(BaseModel):
    """One CLI invocation, independent of click"""

    command: Command
    mode: Mode = "exact"
    input: Optional[str] = None  # file path, inline JSON or "-" for stdin
    tol: Optional[float] = Field(None, ge=0)
    n: Optional[int] = Field(None, ge=1)
    samples: int = Field(25, ge=1)
    seed: Optional[int] = Field(None, ge=0)
    suites: List[str] = Field(default_factory=list)
    pretty: bool = False
    output: Optional[str] = None
    jobs: int = Field(1, ge=1)


def read_input(source: Optional[str]) -> Any:
    """
    Load the JSON payload of a job.

    Args:
        source: "-" for stdin, a path to an existing file, or inline JSON text

    Returns:
        the decoded JSON value

    Raises:
        InputError: missing input or invalid JSON
    """
    if source is None:
        raise InputError("This command needs an input document")
    if source == "-":
        text = sys.stdin.read()
    elif os.path.isfile(source):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"Input is neither a readable file nor valid JSON: {exc}") from exc


def _batch(job: JobSpec, payload: Any, one: Callable[[Any], dict]) -> Any:
    """Apply one() to a document or, in input order, to every document of an array"""
    if not isinstance(payload, list):
        return one(payload)
    if job.jobs == 1:
        return [one(item) for item in payload]
    with ThreadPoolExecutor(max_workers=job.jobs) as pool:
        return list(pool.map(one, payload))


def _check(job: JobSpec, data: Any) -> dict:
    Y = load(TrigPolyDocument, data).to_trig(job.mode == "exact")
    return dump(VerdictDocument.from_verdict(classify(Y, job.tol)))


def _factor(job: JobSpec, data: Any) -> dict:
    Y = load(TrigPolyDocument, data).to_trig(job.mode == "exact")
    verdict = classify(Y, job.tol)
    if verdict.classification is Classification.OUTSIDE:
        raise PreconditionError(
            f"Y is outside the cone (min T = {verdict.min_value:.6g} at t = {verdict.minimizer_t:.6g})"
        )
    return dump(PolyDocument.from_poly(verdict.factor.X))


def _scalar(quantity: str, job: JobSpec, value) -> dict:
    return dump(ScalarDocument(quantity=quantity, mode=job.mode, value=dump_scalar(value)))


def _dis2(job: JobSpec, data: Any) -> dict:
    Y = load(TrigPolyDocument, data).to_trig(job.mode == "exact")
    return _scalar("dis2", job, dis2(Y))


def _resultant(job: JobSpec, data: Any) -> dict:
    document = load(ResultantDocument, data)
    exact = job.mode == "exact"
    return _scalar("resultant", job, resultant(document.p.to_poly(exact), document.q.to_poly(exact)))


def _discriminant(job: JobSpec, data: Any) -> dict:
    P = load(PolyDocument, data).to_poly(job.mode == "exact")
    return _scalar("discriminant", job, discriminant(P))


def _mobius(job: JobSpec, data: Any) -> dict:
    X = load(PolyDocument, data).to_poly(job.mode == "exact")
    return _scalar("mobius", job, mobius_discriminant(X))


def _starlike(job: JobSpec, data: Any) -> dict:
    P = load(PolyDocument, data).to_poly(job.mode == "exact")
    return dump(StarlikeDocument.from_report(is_starlike(P, job.tol)))


HANDLERS = {
    "check": (_check, True),
    "factor": (_factor, False),
    "dis2": (_dis2, False),
    "resultant": (_resultant, False),
    "discriminant": (_discriminant, False),
    "mobius": (_mobius, False),
    "starlike": (_starlike, True),
}


def _verify(job: JobSpec) -> Tuple[int, dict]:
    if job.seed is None:
        raise InputError("--seed is required so the report can be replayed")
    suites = ["examples"] if job.command == "examples" else (job.suites or list(DEFAULT_SUITES))
    n = job.n or 3
    results = run_suites(suites, n, job.samples, job.seed, job.mode)
    report = VerifyDocument(ok=all(r.ok for r in results), suites=results)
    if not report.ok:
        logger.error("Identity mismatch in %s", [r.suite for r in results if not r.ok])
        return VerificationError.exit_code, dump(report)
    return EXIT_OK, dump(report)


def run(job: JobSpec) -> Tuple[int, Any]:
    """
    Execute a job.

    Returns:
        (exit status, JSON-ready report); failures report {"error", "message"} with the
        exit status of the exception class (1 input, 2 numeric, 3 verification)
    """
    try:
        if job.command in ("verify", "examples"):
            return _verify(job)
        handler, batched = HANDLERS[job.command]
        payload = read_input(job.input)
        if batched:
            return EXIT_OK, _batch(job, payload, lambda item: handler(job, item))
        return EXIT_OK, handler(job, payload)
    except TrigConeError as exc:
        logger.error("%s failed: %s", job.command, exc)
        return exc.exit_code, {"error": type(exc).__name__, "message": str(exc)}


def emit(job: JobSpec, report: Any) -> None:
    text = json.dumps(report, indent=2 if job.pretty else None)
    if job.output:
        Path(job.output).write_text(text + "\n", encoding="utf-8")
    else:
        click.echo(text)


def _configure_logging(level: Optional[str]) -> None:
    level = (level or get_settings().log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        force=True,
    )


def _execute(ctx: click.Context, **fields) -> None:
    try:
        job = load(JobSpec, fields)
    except InputError as exc:
        click.echo(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        ctx.exit(exc.exit_code)
    code, report = run(job)
    emit(job, report)
    ctx.exit(code)


def output_options(func):
    func = click.option("--out", "output", type=click.Path(dir_okay=False), help="Write JSON here instead of stdout")(func)
    func = click.option("--json/--pretty", "compact", default=True, help="Compact or indented JSON")(func)
    func = click.option("--mode", type=click.Choice(["exact", "float"]), default="exact", show_default=True)(func)
    return func


@click.group()
@click.option("--log-level", default=None, help="Logging level (default TRIGCONE_LOG_LEVEL or WARNING)")
def main(log_level: Optional[str]) -> None:
    """Certify nonnegative trigonometric polynomials."""
    _configure_logging(log_level)


def _document_command(name: str, help_text: str, batched: bool):
    @click.argument("source", metavar="INPUT")
    @output_options
    @click.option("--tol", type=float, default=None, help="Relative boundary band")
    @click.pass_context
    def command(ctx, source, output, compact, mode, tol, **extra):
        _execute(
            ctx,
            command=name,
            input=source,
            output=output,
            pretty=not compact,
            mode=mode,
            tol=tol,
            jobs=extra.get("jobs") or 1,
        )

    if batched:
        command = click.option("--jobs", type=int, default=1, show_default=True, help="Worker threads for arrays")(command)
    command.__doc__ = help_text
    return main.command(name)(command)


_document_command("check", "Classify Y as inside, boundary or outside the cone.", batched=True)
_document_command("factor", "Outer Fejer-Riesz factor X of a nonnegative Y.", batched=False)
_document_command("dis2", "Dis2(Y), the discriminant of the lift of Y.", batched=False)
_document_command("resultant", "Res(P, Q) from {\"p\": ..., \"q\": ...}.", batched=False)
_document_command("discriminant", "Dis(P) at the declared degree.", batched=False)
_document_command("mobius", "V(X) = Res(X*, X).", batched=False)
_document_command("starlike", "Starlikeness of P with P(0) = 0 on the unit disk.", batched=True)


@main.command("verify")
@output_options
@click.option("--suite", "suites", multiple=True, type=click.Choice(sorted(SUITES)), help="Suites to run (repeatable)")
@click.option("--lemma", type=click.IntRange(1, 3), default=None, help="Shorthand for --suite lemmaN")
@click.option("--n", type=int, default=3, show_default=True)
@click.option("--samples", type=int, default=25, show_default=True)
@click.option("--seed", type=int, required=True)
@click.pass_context
def verify_command(ctx, output, compact, mode, suites, lemma, n, samples, seed):
    """Run the identity-verification suites on seeded random points."""
    suites = list(suites)
    if lemma is not None:
        suites.append(f"lemma{lemma}")
    _execute(
        ctx,
        command="verify",
        output=output,
        pretty=not compact,
        mode=mode,
        suites=suites,
        n=n,
        samples=samples,
        seed=seed,
    )


@main.command("examples")
@output_options
@click.option("--samples", type=int, default=100, show_default=True)
@click.option("--seed", type=int, required=True)
@click.pass_context
def examples_command(ctx, output, compact, mode, samples, seed):
    """Check the closed forms of Dis2 and V for n = 1, 2 at seeded random points."""
    _execute(ctx, command="examples", output=output, pretty=not compact, mode=mode, samples=samples, seed=seed)


if __name__ == "__main__":
    main()

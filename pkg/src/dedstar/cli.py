"""Command-line interface.

Verbs: enumerate, count, verify, star, adapter, hasse.  Exit codes: 0 pass,
1 failed verification assertion, 2 size-guard refusal, 3 I/O error,
4 malformed input.  Output is deterministic byte-for-byte for fixed flags.
"""

from __future__ import annotations

import json
import random
import re
import sys
from typing import List, Optional, Sequence, Tuple

import click

from . import extvec, moore, rationals, stars
from .extvec import POS_INF, ZERO, ValVector
from .moore import GuardError, MooreFamily

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_GUARD = 2
EXIT_IO = 3
EXIT_INPUT = 4


class InputError(ValueError):
    """Malformed CLI input (exit code 4)."""


class VerifyFailure(RuntimeError):
    """A verification suite assertion failed (exit code 1)."""


# ---------------------------------------------------------------------------
# Parsing helpers

_BARE_KEY = re.compile(r'([{\s,])([A-Za-z_]\w*)\s*:')


def _lenient_json(text: str) -> dict:
    """JSON with optional bare keys, e.g. {n:2,members:[[0],[0,1]]}."""
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        pass
    try:
        return json.loads(_BARE_KEY.sub(r'\1"\2":', text))
    except json.JSONDecodeError as exc:
        raise InputError(f"cannot parse record {text!r}: {exc}") from exc


def _load_text(source: str) -> str:
    """Inline text, or file contents when prefixed with '@'."""
    if source.startswith("@"):
        with open(source[1:], "r", encoding="utf-8") as fh:
            return fh.read()
    return source


def parse_family(text: str) -> MooreFamily:
    record = _lenient_json(_load_text(text))
    try:
        return moore.family_from_record(record)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad family record: {exc}") from exc


def parse_vector_inline(text: str, primes: Optional[Sequence] = None):
    """Parenthesized comma list with tokens integer|inf|-inf."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    entries = []
    for token in body.split(","):
        token = token.strip()
        if token == "inf":
            entries.append(POS_INF)
        elif token == "-inf":
            entries.append(extvec.NEG_INF)
        else:
            try:
                entries.append(int(token))
            except ValueError as exc:
                raise InputError(f"bad vector token {token!r}") from exc
    if not entries:
        raise InputError("empty vector")
    if primes is None:
        primes = tuple(range(len(entries)))
    if len(primes) != len(entries):
        raise InputError("vector length does not match spectrum")
    return extvec.make_vector(tuple(primes), entries)


def format_vector(f) -> str:
    if f is ZERO:
        return "ZERO"
    tokens = ["inf" if e is POS_INF else str(e) for e in f.entries]
    return "(" + ",".join(tokens) + ")"


def _parse_primes(text: str) -> Tuple[int, ...]:
    try:
        ps = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad prime list {text!r}") from exc
    if not ps or any(p < 2 for p in ps) or len(set(ps)) != len(ps):
        raise InputError(f"bad prime list {text!r}")
    return ps


def _parse_gens(text: str):
    try:
        gens = tuple(rationals.parse_rational(tok) for tok in text.split(","))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if any(g == 0 for g in gens):
        raise InputError("zero generator")
    return gens


# ---------------------------------------------------------------------------
# Commands


@click.group()
def cli() -> None:
    """Lattice of semistar operations on a semilocal Dedekind domain."""


@cli.command(name="count")
@click.argument("n", type=int)
@click.option("--force", is_flag=True, help="override the enumeration size guard")
def cmd_count(n: int, force: bool) -> None:
    """Print the number of semistar operations for an n-prime spectrum."""
    click.echo(str(moore.count_moore(n, force=force)))


@cli.command(name="enumerate")
@click.argument("n", type=int)
@click.option("--count-only", is_flag=True)
@click.option("--out", type=click.Path(writable=True), default=None)
@click.option("--force", is_flag=True)
def cmd_enumerate(n: int, count_only: bool, out: Optional[str], force: bool) -> None:
    """Stream every closed-support family in canonical order."""
    if count_only:
        click.echo(str(moore.count_moore(n, force=force)))
        return
    sink = open(out, "w", encoding="utf-8") if out else sys.stdout
    try:
        for family in moore.enumerate_moore(n, force=force):
            record = moore.family_to_record(family)
            sink.write(json.dumps(record, separators=(",", ":")) + "\n")
    finally:
        if out:
            sink.close()


SUITES = ("table1", "bounds", "finite-type", "n2-shape", "oracles", "axioms")


@cli.command(name="verify")
@click.argument("suite", type=click.Choice(SUITES))
@click.argument("n", type=int, required=False)
@click.option("--max-n", type=int, default=4)
@click.option("--trials", type=int, default=1000)
@click.option("--seed", type=int, default=0)
def cmd_verify(suite: str, n: Optional[int], max_n: int, trials: int, seed: int) -> None:
    """Run a verification suite; exit 1 on any failed assertion."""
    checks: List[Tuple[str, bool]] = []
    if suite == "table1":
        for k in range(1, max_n + 1):
            got = moore.count_moore(k)
            checks.append((f"count({k}) == {moore.KNOWN_COUNTS[k]}",
                           got == moore.KNOWN_COUNTS[k]))
    elif suite == "bounds":
        for k in range(1, max_n + 1):
            c = moore.count_moore(k)
            checks.append((f"2^C({k},{k // 2}) <= count({k}) <= 2^2^{k}",
                           moore.binom_lower_bound(k) <= c <= 2 ** (2 ** k)))
    elif suite == "finite-type":
        k = n if n is not None else 3
        if k > moore.ENUMERATION_GUARD:
            raise GuardError("finite-type census needs full enumeration")
        census = sum(
            1 for fam in moore.enumerate_moore(k)
            if moore.is_principal_upfilter(fam)[0]
        )
        checks.append((f"finite-type census at n={k} equals 2^{k}", census == 2 ** k))
    elif suite == "n2-shape":
        checks.append(("star lattice at n=2 matches the cube minus one coatom",
                       _n2_shape_holds()))
    elif suite == "oracles":
        bad = _colon_oracle_mismatches(trials, seed)
        checks.append((f"colon oracle equals vector colon on {trials} pairs", bad == 0))
    elif suite == "axioms":
        bad = _axiom_violations(min(trials, 10000), seed, max_n=min(max_n, 4))
        checks.append((f"closure/nucleus axioms on {min(trials, 10000)} samples", bad == 0))
    failed = False
    for name, ok in checks:
        click.echo(("PASS " if ok else "FAIL ") + name)
        failed = failed or not ok
    if failed:
        raise VerifyFailure(suite)


def _n2_shape_holds() -> bool:
    families = list(moore.enumerate_moore(2))
    star_list = [stars.star_from_moore(f) for f in families]
    target = [frozenset(s) for s in
              _powerset_sets({1, 2, 3}) if frozenset(s) != frozenset({1})]
    return moore.poset_iso(
        star_list, stars.star_le, target, lambda a, b: a <= b, "iso"
    )


def _powerset_sets(ground):
    items = sorted(ground)
    out = []
    for mask in range(1 << len(items)):
        out.append({items[i] for i in range(len(items)) if mask >> i & 1})
    return out


def random_frac_spec(rng: random.Random, primes=(2, 3, 5), max_gens: int = 3,
                     exponent_bound: int = 5) -> rationals.FracIdealSpec:
    """Random finitely generated module with generators supported on primes."""
    from fractions import Fraction

    gens = []
    for _ in range(rng.randint(1, max_gens)):
        g = Fraction(1)
        for p in primes:
            g *= Fraction(p) ** rng.randint(-exponent_bound, exponent_bound)
        gens.append(g)
    return rationals.FracIdealSpec(tuple(primes), tuple(gens))


def _colon_oracle_mismatches(trials: int, seed: int) -> int:
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        spec_i = random_frac_spec(rng)
        spec_j = random_frac_spec(rng)
        via_oracle = rationals.colon_oracle(spec_i, spec_j)
        via_vectors = extvec.vec_colon(
            rationals.vector_of_module(spec_i), rationals.vector_of_module(spec_j)
        )
        if via_oracle != via_vectors:
            bad += 1
    return bad


def random_vector(rng: random.Random, primes, lo: int = -10, hi: int = 10,
                  inf_chance: float = 0.3) -> ValVector:
    entries = tuple(
        POS_INF if rng.random() < inf_chance else rng.randint(lo, hi)
        for _ in primes
    )
    return ValVector(tuple(primes), entries)


def _axiom_violations(trials: int, seed: int, max_n: int) -> int:
    rng = random.Random(seed)
    pools = {k: list(moore.enumerate_moore(k)) for k in range(1, max_n + 1)}
    bad = 0
    for _ in range(trials):
        k = rng.randint(1, max_n)
        primes = tuple(range(k))
        star = stars.star_from_moore(rng.choice(pools[k]), primes)
        f = random_vector(rng, primes)
        g = random_vector(rng, primes)
        fa, ga = stars.apply(star, f), stars.apply(star, g)
        ok = extvec.vec_le(f, fa)
        ok = ok and stars.apply(star, fa) == fa
        if extvec.vec_le(f, g):
            ok = ok and extvec.vec_le(fa, ga)
        prod = extvec.vec_mul(f, g)
        ok = ok and stars.apply(star, extvec.vec_mul(fa, ga)) == stars.apply(star, prod)
        if not ok:
            bad += 1
    return bad


@cli.group(name="star")
def cmd_star() -> None:
    """Star algebra: apply, meet, join, classify, v-of, d-of."""


def _family_option(required: bool = True):
    return click.option("--family", "family_texts", multiple=True, required=required,
                        help="inline family record or @file; repeatable")


@cmd_star.command(name="apply")
@_family_option()
@click.option("--module", "module_text", required=True)
def star_apply(family_texts, module_text: str) -> None:
    family = parse_family(family_texts[0])
    f = parse_vector_inline(module_text)
    if f is ZERO:
        raise InputError("cannot apply a star to the zero module")
    if f.n != family.n:
        raise InputError("module length does not match family ground set")
    star = stars.star_from_moore(family)
    click.echo(format_vector(stars.apply(star, f)))


@cmd_star.command(name="meet")
@_family_option()
def star_meet_cmd(family_texts) -> None:
    ss = [stars.star_from_moore(parse_family(t)) for t in family_texts]
    if len({s.n for s in ss}) != 1:
        raise InputError("families have different ground sets")
    result = stars.star_meet(ss)
    click.echo(json.dumps(moore.family_to_record(result.family), separators=(",", ":")))


@cmd_star.command(name="join")
@_family_option()
def star_join_cmd(family_texts) -> None:
    ss = [stars.star_from_moore(parse_family(t)) for t in family_texts]
    if len({s.n for s in ss}) != 1:
        raise InputError("families have different ground sets")
    result = stars.star_join(ss)
    click.echo(json.dumps(moore.family_to_record(result.family), separators=(",", ":")))


@cmd_star.command(name="classify")
@_family_option()
def star_classify(family_texts) -> None:
    star = stars.star_from_moore(parse_family(family_texts[0]))
    click.echo(", ".join(stars.classify(star)))


@cmd_star.command(name="v-of")
@click.option("--module", "module_text", required=True)
def star_v_of(module_text: str) -> None:
    j = parse_vector_inline(module_text)
    if j is ZERO:
        raise InputError("divisorial closure needs a nonzero module")
    star = stars.v_of(j)
    click.echo(json.dumps(moore.family_to_record(star.family), separators=(",", ":")))


@cmd_star.command(name="d-of")
@click.option("--n", "n", type=int, required=True)
@click.option("--localized-at", "x_text", default="",
              help="comma-separated prime indices of the overring (empty for K)")
def star_d_of(n: int, x_text: str) -> None:
    if n < 1:
        raise InputError("n must be >= 1")
    try:
        x = [int(tok) for tok in x_text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise InputError(f"bad index list {x_text!r}") from exc
    if any(not 0 <= i < n for i in x):
        raise InputError("index out of range")
    star = stars.d_of_overring(tuple(range(n)), x)
    click.echo(json.dumps(moore.family_to_record(star.family), separators=(",", ":")))


@cli.command(name="adapter")
@click.option("--primes", "primes_text", required=True)
@click.option("--gens", "gens_text", required=True)
@click.option("--member", "member_text", default=None)
def cmd_adapter(primes_text: str, gens_text: str, member_text: Optional[str]) -> None:
    """Valuation vector of a rational-generated ideal, or a membership test."""
    primes = _parse_primes(primes_text)
    gens = _parse_gens(gens_text)
    spec = rationals.FracIdealSpec(primes, gens)
    vec = rationals.vector_of_module(spec)
    if member_text is None:
        click.echo(format_vector(vec))
        return
    try:
        r = rationals.parse_rational(member_text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if r == 0:
        raise InputError("membership test is for nonzero rationals")
    click.echo("true" if rationals.module_member(vec, r) else "false")


@cli.command(name="hasse")
@click.argument("n", type=int, required=False)
@click.option("--star-file", "star_files", multiple=True)
@click.option("--format", "fmt", type=click.Choice(["dot", "json"]), default="dot")
def cmd_hasse(n: Optional[int], star_files, fmt: str) -> None:
    """Cover relations of the star lattice (order: reverse family inclusion)."""
    if n is None and not star_files:
        raise InputError("give a spectrum size or star files")
    if n is not None:
        if n < 1:
            raise InputError("n must be >= 1")
        if n > moore.ENUMERATION_GUARD or moore.KNOWN_COUNTS.get(n, moore.ISO_GUARD + 1) > moore.ISO_GUARD:
            raise GuardError(f"star lattice at n={n} exceeds {moore.ISO_GUARD} elements")
        star_list = [stars.star_from_moore(f) for f in moore.enumerate_moore(n)]
    else:
        star_list = []
        for path in star_files:
            record = _lenient_json(_load_text("@" + path))
            try:
                star_list.append(stars.star_from_record(record))
            except (KeyError, TypeError, ValueError) as exc:
                raise InputError(f"bad star file {path}: {exc}") from exc
        if len(star_list) > moore.ISO_GUARD:
            raise GuardError(f"more than {moore.ISO_GUARD} stars")
    edges = moore.hasse(star_list, stars.star_le)
    labels = [
        "{" + ";".join(
            "{" + ",".join(map(str, moore.indices_of(m))) + "}"
            for m in s.family.members
        ) + "}"
        for s in star_list
    ]
    if fmt == "dot":
        click.echo(moore.hasse_dot(labels, edges), nl=False)
    else:
        payload = {
            "nodes": [moore.family_to_record(s.family) for s in star_list],
            "edges": [list(e) for e in edges],
        }
        click.echo(json.dumps(payload, separators=(",", ":")))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point with the documented exit-code contract."""
    try:
        cli.main(args=list(argv) if argv is not None else None,
                 standalone_mode=False)
    except VerifyFailure:
        return EXIT_ASSERTION
    except GuardError as exc:
        click.echo(f"refused: {exc}", err=True)
        return EXIT_GUARD
    except (InputError, click.UsageError, extvec.SpectrumError,
            extvec.ZeroModuleError) as exc:
        click.echo(f"input error: {exc}", err=True)
        return EXIT_INPUT
    except OSError as exc:
        click.echo(f"i/o error: {exc}", err=True)
        return EXIT_IO
    except click.exceptions.Exit as exc:
        return exc.exit_code
    return EXIT_OK


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

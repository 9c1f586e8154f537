"""Command-line front end.

Exit codes: 0 success (quotient exists where applicable), 1 quotient does
not exist, 2 usage error, 3 invalid input, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bijection import BijFile, parse_bijection, serialize_bijection
from .corpus import run_corpus
from .division import fp_divide, parallelize
from .equivariance import (
    Budget,
    equivariant_quotient,
    nonexistence_from_symmetries,
    parse_symmetries,
    render_certificate,
    render_symmetries,
    stabilizer,
)
from .errors import BudgetExceeded, EquidivError, FormatError
from .gallery import (
    CayleyTable,
    checkered_product,
    regular_rep,
    render_parallel_table,
    shift_table,
)
from .lazy import build_counterexample, render_lazy
from .perm import PermGroup, parse_cycles
from .search import probe_cancelling

EXIT_NOT_EXISTS = 1
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_BUDGET = 4


def _default_labels(n: int, kind: str) -> tuple[str, ...]:
    if kind == "letters" and n <= 26:
        return tuple(chr(ord("a") + i) for i in range(n))
    return tuple(str(i) for i in range(n))


def _c_labels(bf: BijFile) -> tuple[str, ...]:
    return bf.c_labels or tuple(str(i) for i in range(bf.bij.n_c))


def _resolve_group(spec: str, c_labels: tuple[str, ...]) -> tuple[PermGroup, str]:
    n = len(c_labels)
    if spec == "full":
        return PermGroup.symmetric(n), "full"
    if spec == "trivial":
        return PermGroup.trivial(n), "trivial"
    if spec.startswith("gens:"):
        gens = [parse_cycles(tok, c_labels) for tok in spec[len("gens:"):].split()]
        if not gens:
            raise FormatError("gens: needs at least one cycle product")
        return PermGroup.generated(gens, n), spec
    raise FormatError(f"unknown group spec {spec!r} (use full, trivial, or gens:...)")


def _load(path: str) -> BijFile:
    return parse_bijection(Path(path).read_text())


def _resolve_base(token: str, c_labels: tuple[str, ...]) -> int:
    if token in c_labels:
        return c_labels.index(token)
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"unknown basepoint {token!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_divide(args) -> int:
    bf = _load(args.infile)
    h = fp_divide(bf.bij, _resolve_base(args.base, _c_labels(bf)))
    _emit(" ".join(str(b) for b in h.images) + "\n", args.out)
    return 0


def _cmd_parallelize(args) -> int:
    bf = _load(args.infile)
    bar = parallelize(bf.bij)
    _emit(serialize_bijection(bar, bf.a_labels, bf.b_labels, bf.c_labels), args.out)
    return 0


def _cmd_stab(args) -> int:
    bf = _load(args.infile)
    group, _ = _resolve_group(args.group, _c_labels(bf))
    triples = stabilizer(bf.bij, group, Budget(args.budget))
    sys.stdout.write(
        render_symmetries(triples, bf.a_labels, bf.b_labels, _c_labels(bf))
    )
    return 0


def _cmd_quotient(args) -> int:
    bf = _load(args.infile)
    c_labels = _c_labels(bf)
    budget = Budget(args.budget)
    if args.symmetries:
        n = bf.bij.n_a
        a_labels = bf.a_labels or tuple(str(i) for i in range(n))
        b_labels = bf.b_labels or tuple(str(i) for i in range(n))
        triples = parse_symmetries(
            Path(args.symmetries).read_text(), a_labels, b_labels, c_labels
        )
        cert = nonexistence_from_symmetries(bf.bij, triples, budget)
        if cert is None:
            sys.stdout.write("undecided: symmetry subset admits a matching\n")
            return 0
    else:
        group, _ = _resolve_group(args.group, c_labels)
        cert = equivariant_quotient(bf.bij, group, budget)
    text = render_certificate(cert, bf.a_labels, bf.b_labels, bf.c_labels)
    if args.certificate:
        Path(args.certificate).write_text(text)
    sys.stdout.write(text)
    return 0 if cert.verdict == "exists" else EXIT_NOT_EXISTS


def _cmd_gallery(args) -> int:
    kind = args.kind
    if kind == "cyclic":
        f = regular_rep(CayleyTable.cyclic(int(args.arg)))
        labels = _default_labels(f.n_c, "letters")
        sys.stdout.write(serialize_bijection(f, None, None, labels))
    elif kind == "klein":
        f = regular_rep(CayleyTable.klein())
        sys.stdout.write(serialize_bijection(f, None, None, ("a", "b", "c", "d")))
    elif kind == "regular-rep":
        rows = []
        for line in Path(args.arg).read_text().splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                rows.append(tuple(int(t) for t in line.split()))
        f = regular_rep(CayleyTable(tuple(rows)))
        sys.stdout.write(serialize_bijection(f))
    elif kind == "checkered":
        # label universe: letters for the support of sigma, declared by degree
        text = args.arg
        letters = sorted({t for t in text if t.isalpha()})
        sigma = parse_cycles(text, letters)
        prod = checkered_product(sigma, tuple(letters))
        sys.stdout.write(
            serialize_bijection(prod.bij, prod.a_labels, prod.b_labels, prod.c_labels)
        )
    elif kind == "thm4":
        labels = tuple(args.labels.split()) if args.labels else None
        if labels is None:
            labels = tuple(sorted({t for t in args.arg if t.isalpha()}))
        gamma = parse_cycles(args.arg, labels)
        lazy = build_counterexample(gamma, labels)
        sys.stdout.write(render_lazy(lazy, args.window))
    elif kind == "gadget-xyz":
        order = tuple(args.arg.split(","))
        labels = tuple(sorted(order))
        f = shift_table(order, labels)
        sys.stdout.write(render_parallel_table(f, ("0", "1", "2"), labels))
    else:  # pragma: no cover - argparse restricts choices
        raise FormatError(f"unknown gallery kind {kind!r}")
    return 0


def _cmd_probe(args) -> int:
    c_labels = _default_labels(args.n_c, "letters")
    group, name = _resolve_group(args.group, c_labels)
    report = probe_cancelling(
        args.n_a,
        args.n_c,
        group,
        args.mode,
        sample=args.sample,
        seed=args.seed,
        jobs=args.jobs,
        group_name=name,
        node_limit=args.budget,
    )
    sys.stdout.write(report.render())
    if args.cert_dir:
        outdir = Path(args.cert_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        for cex in report.counterexamples:
            (outdir / f"cex-{cex.index:06d}.eqd").write_text(
                serialize_bijection(cex.bij)
            )
            (outdir / f"cex-{cex.index:06d}.cert").write_text(
                render_certificate(cex.certificate)
            )
    return 0


def _cmd_verify_paper(args) -> int:
    return 0 if run_corpus(sys.stdout) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equidiv",
        description="Equivariant division of bijections f : A x C -> B x C",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("divide", help="basepoint division")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--base", required=True, help="C index or label")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_divide)

    p = sub.add_parser("parallelize", help="collect all basepoint quotients")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_parallelize)

    p = sub.add_parser("stab", help="list all symmetries of a bijection")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--group", default="full")
    p.add_argument("--budget", type=int, default=10**7)
    p.set_defaults(fn=_cmd_stab)

    p = sub.add_parser("quotient", help="decide equivariant quotient existence")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--group", default="full")
    p.add_argument("--symmetries", help="symmetry file: nonexistence-only subset mode")
    p.add_argument("--certificate", help="also write the certificate to this path")
    p.add_argument("--budget", type=int, default=10**7)
    p.set_defaults(fn=_cmd_quotient)

    p = sub.add_parser("gallery", help="emit a gallery instance")
    p.add_argument(
        "kind",
        choices=["regular-rep", "cyclic", "klein", "checkered", "thm4", "gadget-xyz"],
    )
    p.add_argument("arg", nargs="?", default="")
    p.add_argument("--window", type=int, default=8, help="columns for lazy tables")
    p.add_argument("--labels", help="C labels for thm4 (space separated)")
    p.set_defaults(fn=_cmd_gallery)

    p = sub.add_parser("probe", help="scan all bijections at a small size")
    p.add_argument("--nA", dest="n_a", type=int, required=True)
    p.add_argument("--nC", dest="n_c", type=int, required=True)
    p.add_argument("--group", default="full")
    p.add_argument("--mode", choices=["all", "parallel"], default="all")
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cert-dir")
    p.add_argument("--budget", type=int, default=10**7)
    p.set_defaults(fn=_cmd_probe)

    p = sub.add_parser("verify-paper", help="run the built-in verification corpus")
    p.set_defaults(fn=_cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FormatError, EquidivError, ValueError, OSError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

"""Command line entry point: ``coauthor-h <command> [options]``.

Exit status: 0 success, 1 data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, bibfetch, fixtures
from .corpus import author_stats, dump_json, load_corpus, validate
from .eigen import jacobi_eigen, principal_lc1
from .errors import DataError
from .fractional import fractional_hmatrix, get_scheme
from .hmatrix import build, load_matrix, order_by_h
from .metrics import joint_count, joint_h


class UsageError(Exception):
    pass


def _authors(text: str) -> list[str]:
    names = [a.strip() for a in text.split(",") if a.strip()]
    if not names:
        raise argparse.ArgumentTypeError("expected a comma-separated author list")
    return names


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--corpus", metavar="FILE", help="CSV or JSON publication file")
    p.add_argument("--format", choices=("csv", "json"), dest="corpus_format",
                   help="corpus format (default: from the file suffix)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--quiet", action="store_true", help="suppress warnings and detail lines")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="coauthor-h",
        description="Joint h-indices, co-authorship H-matrices and their eigenanalysis.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def cmd(name, help_):
        return sub.add_parser(name, parents=[common], help=help_, description=help_)

    cmd("validate", "check a corpus file against its invariants")

    p = cmd("hindex", "h-index and productivity figures of one author")
    p.add_argument("author")

    p = cmd("jointh", "joint h-index of two or more co-authors")
    p.add_argument("authors", nargs="+")

    p = cmd("hmatrix", "build the H-matrix of a list of authors")
    p.add_argument("--authors", type=_authors, required=True)
    p.add_argument("--sort", action="store_true", help="order authors by decreasing h")

    p = cmd("eigen", "eigenvalues, lc1 vector and effective h of a matrix file")
    p.add_argument("--matrix", required=True, metavar="FILE")

    p = cmd("report", "team report: spectrum, weights, gains and losses")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--authors", type=_authors)
    src.add_argument("--matrix", metavar="FILE")
    p.add_argument("--sort", action="store_true")
    p.add_argument("--compare-schemes", action="store_true",
                   help="add Schreiber and FNRS fractional matrices")
    p.add_argument("--mode", choices=("rank", "citation"), default="rank")

    p = cmd("subsets", "average rank-matched eigenvalue over author subsets")
    p.add_argument("--focal", required=True)
    pool = p.add_mutually_exclusive_group(required=True)
    pool.add_argument("--pool", type=_authors)
    pool.add_argument("--matrix", metavar="FILE")
    p.add_argument("--size", type=int, required=True)

    p = cmd("fractional", "fractionalized H-matrix next to the plain one")
    p.add_argument("--scheme", choices=("schreiber", "fnrs"), default="schreiber")
    p.add_argument("--mode", choices=("rank", "citation"), default="rank")
    p.add_argument("--authors", type=_authors, required=True)

    p = cmd("fetch", "download an author's works and write corpus JSON")
    p.add_argument("--endpoint", required=True, help="API base URL, e.g. https://api.openalex.org")
    p.add_argument("--author", required=True, help="author id at the source")
    p.add_argument("--out", required=True, metavar="FILE")
    p.add_argument("--page-limit", type=int, default=50)
    p.add_argument("--id-policy", choices=sorted(bibfetch.ID_POLICIES), default="source_id")
    p.add_argument("--replay", metavar="DIR", help="serve recorded pages from DIR instead of the network")

    p = cmd("verify-fixtures", "replay the bundled published matrices")
    p.add_argument("--eig-tol", type=float, default=fixtures.EIG_TOL)
    p.add_argument("--lc1-rtol", type=float, default=fixtures.LC1_RTOL)
    return parser


# -- commands ------------------------------------------------------------------

def _corpus(args):
    if not args.corpus:
        raise UsageError(f"{args.command}: --corpus FILE is required")
    return load_corpus(args.corpus, args.corpus_format)


def _vec(x) -> list:
    return [float(v) for v in x]


def _line(values) -> str:
    return "  ".join(f"{v:10.4f}" for v in values)


def do_validate(args, out):
    # load_corpus already rejects broken files; validate covers the rest
    corpus = _corpus(args)
    problems = validate(corpus)
    if args.json:
        print(json.dumps({"papers": len(corpus.papers), "authors": len(corpus.author_index),
                          "violations": problems}, indent=2), file=out)
    else:
        for p in problems:
            print(p, file=out)
        print(f"{len(corpus.papers)} papers, {len(corpus.author_index)} authors, "
              f"{len(problems)} violation(s)", file=out)
    return 1 if problems else 0


def do_hindex(args, out):
    s = author_stats(_corpus(args), args.author)
    if args.json:
        print(json.dumps(vars(s), indent=2), file=out)
    else:
        print(f"{s.author}: h = {s.h}", file=out)
        if not args.quiet:
            for k in ("most_cited", "citations_in_h_core", "n_coauthors",
                      "n_papers_with_best_coauthor", "n_publications"):
                print(f"  {k:<28} {getattr(s, k)}", file=out)
    return 0


def do_jointh(args, out):
    corpus = _corpus(args)
    h = joint_h(corpus, args.authors)
    n = joint_count(corpus, args.authors)
    if args.json:
        print(json.dumps({"authors": args.authors, "h": h.value, "joint_papers": n}), file=out)
    else:
        print(f"h({','.join(args.authors)}) = {h.value}  (N = {n} joint papers)", file=out)
    return 0


def _print_matrix(m, out, label="H-matrix"):
    w = max(6, max(len(a) for a in m.authors))
    print(f"{label}", file=out)
    print(" " * (w + 2) + " ".join(f"{a:>{w}}" for a in m.authors), file=out)
    for i, a in enumerate(m.authors):
        print(f"  {a:<{w}}" + " ".join(f"{analysis._fmt(x):>{w}}" for x in m.entries[i]), file=out)


def _counts(m):
    return [{"authors": sorted(k), "n": v}
            for k, v in sorted(m.joint_counts.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))]


def do_hmatrix(args, out):
    m = build(_corpus(args), args.authors)
    if args.sort:
        m = order_by_h(m)
    if args.json:
        print(json.dumps({"authors": list(m.authors), "matrix": m.entries.tolist(),
                          "joint_counts": _counts(m)}, indent=2), file=out)
    else:
        _print_matrix(m, out)
        for c in _counts(m):
            print(f"  N({','.join(c['authors'])}) = {c['n']}", file=out)
    return 0


def eigen_payload(m) -> dict:
    d = jacobi_eigen(m)
    pw = principal_lc1(d)
    return {
        "authors": list(m.authors),
        "eigenvalues": _vec(d.eigenvalues),
        "lc1": None if pw.lc1_vector is None else _vec(pw.lc1_vector),
        "weights": _vec(pw.normalized_weights),
        "effective_h": _vec(pw.effective_h),
        "degenerate": pw.degenerate,
    }


def do_eigen(args, out):
    m = load_matrix(args.matrix)
    res = eigen_payload(m)
    if args.json:
        print(json.dumps(res, indent=2), file=out)
        return 0
    print("eigenvalues  " + _line(res["eigenvalues"]), file=out)
    w = max(6, max(len(a) for a in m.authors))
    print(f"{'author':<{w}}  {'lc1':>10}  {'weight':>10}  {'eff. h':>10}", file=out)
    for i, a in enumerate(m.authors):
        lc1 = "-" if res["lc1"] is None else f"{res['lc1'][i]:10.4f}"
        print(f"{a:<{w}}  {lc1:>10}  {res['weights'][i]:10.4f}  {res['effective_h'][i]:10.4f}",
              file=out)
    if res["degenerate"]:
        print("note: principal vector has a vanishing component; lc1 not defined", file=out)
    return 0


def do_report(args, out):
    if args.matrix:
        if args.compare_schemes:
            raise UsageError("report: --compare-schemes needs --authors and --corpus")
        m = load_matrix(args.matrix)
        rep = analysis.report_from_matrix(order_by_h(m) if args.sort else m)
    else:
        rep = analysis.team_report(_corpus(args), args.authors, args.compare_schemes,
                                   args.sort, args.mode)
    print(rep.to_json() if args.json else rep.render_text(), file=out)
    return 0


def do_subsets(args, out):
    if args.matrix:
        res = analysis.subset_average_matrix(load_matrix(args.matrix), args.focal, args.size)
    else:
        res = analysis.subset_average(_corpus(args), args.focal, args.pool, args.size)
    print(json.dumps(res.to_dict(), indent=2) if args.json else res.render_text(), file=out)
    return 0


def do_fractional(args, out):
    corpus = _corpus(args)
    scheme = get_scheme(args.scheme)
    plain = build(corpus, args.authors)
    frac = fractional_hmatrix(corpus, args.authors, scheme, args.mode)
    lam_p = jacobi_eigen(plain).eigenvalues
    lam_f = jacobi_eigen(frac).eigenvalues
    if args.json:
        print(json.dumps({
            "authors": list(plain.authors), "scheme": scheme.name, "mode": args.mode,
            "plain": {"matrix": plain.entries.tolist(), "eigenvalues": _vec(lam_p)},
            "fractional": {"matrix": frac.entries.tolist(), "eigenvalues": _vec(lam_f),
                           "clamped": [list(p) for p in frac.clamped]},
        }, indent=2), file=out)
        return 0
    _print_matrix(plain, out, "plain")
    _print_matrix(frac, out, f"fractional ({frac.label})")
    print(f"{'':>4} {'plain':>10} {'fractional':>12}", file=out)
    for k, (a, b) in enumerate(zip(lam_p, lam_f), start=1):
        print(f"l{k:<3} {a:10.4f} {b:12.4f}", file=out)
    if frac.clamped and not args.quiet:
        print("clamped to plain entry: " + ", ".join("-".join(p) for p in frac.clamped), file=out)
    return 0


def do_fetch(args, out, err):
    transport = bibfetch.ReplayTransport.from_dir(args.replay) if args.replay else None
    corpus, warnings = bibfetch.fetch_corpus(args.endpoint, args.author, args.page_limit,
                                             transport, args.id_policy)
    with open(args.out, "w", encoding="utf-8") as fh:
        dump_json(corpus, fh)
    if not args.quiet:
        for w in warnings:
            print(f"warning: {w}", file=err)
    summary = {"out": args.out, "papers": len(corpus.papers), "authors": len(corpus.author_index),
               "sha256": corpus.digest(), "warnings": len(warnings)}
    if args.json:
        print(json.dumps(summary, indent=2), file=out)
    else:
        print(f"wrote {summary['papers']} papers ({summary['authors']} authors) to {args.out}",
              file=out)
    return 0


def do_verify(args, out):
    checks = fixtures.verify_fixtures(args.eig_tol, args.lc1_rtol)
    failed = [c for c in checks if not c.ok]
    if args.json:
        print(json.dumps({"checks": [vars(c) for c in checks], "failed": len(failed)}, indent=2),
              file=out)
    else:
        for c in checks:
            if not args.quiet or not c.ok:
                print(c.line(), file=out)
        known = sum(c.status == "KNOWN" for c in checks)
        print(f"{len(checks)} checks: {len(checks) - len(failed) - known} pass, "
              f"{known} known printed discrepancies, {len(failed)} fail", file=out)
    return 1 if failed else 0


COMMANDS = {
    "validate": do_validate, "hindex": do_hindex, "jointh": do_jointh, "hmatrix": do_hmatrix,
    "eigen": do_eigen, "report": do_report, "subsets": do_subsets, "fractional": do_fractional,
    "verify-fixtures": do_verify,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv:
        parser.print_usage(err)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command is None:
        parser.print_usage(err)
        return 2
    try:
        if args.command == "fetch":
            return do_fetch(args, out, err)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(err)
        print(f"coauthor-h: error: {exc}", file=err)
        return 2
    except (DataError, ValueError, OSError) as exc:
        print(f"coauthor-h: {exc}", file=err)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

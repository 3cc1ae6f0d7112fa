"""Command-line interface: every subcommand prints one JSON report in the
shared envelope and exits 0 when all verdicts are true, 1 when some verdict
is false, 2 on bad input, 3 when the resource cap refuses the request."""
from __future__ import annotations

import argparse
import sys
import time
from math import comb
from typing import Optional, Sequence

from .polycore import CoeffDomain, GF, PolyRing, QQ, parse_polynomial_list
from .groebner import Ideal, ideal_equal
from .invariants import krull_dim
from .toric import (
    ci_check, minimal_generators, toric_ideal_elimination,
    toric_ideal_lattice, veronese_map,
)
from .charp import AffineSemigroup, fedder_fpure, semigroup_member
from .pipeline import (
    ResourceCapError, _assemble, _check, _radical_cover, cd_certificate,
    char_compare, ensure_within_cap, present_monomial_algebra, render_json,
)

__all__ = ["main"]


# ---------------------------------------------------------------------------
# small input grammars
# ---------------------------------------------------------------------------

def _parse_vector(text: str) -> tuple[int, ...]:
    """Comma-separated nonnegative integers: "4,0" -> (4, 0)."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"bad integer vector {text!r}")
    try:
        vec = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"bad integer vector {text!r}") from None
    if any(e < 0 for e in vec):
        raise ValueError(f"negative entry in {text!r}")
    return vec


def _parse_targets(text: str) -> tuple[tuple[int, ...], ...]:
    """Semicolon-separated vectors: "4,0;3,1" -> ((4, 0), (3, 1))."""
    chunks = [c for c in (p.strip() for p in text.split(";")) if c]
    if not chunks:
        raise ValueError(f"bad target list {text!r}")
    return tuple(_parse_vector(c) for c in chunks)


def _parse_primes(text: str) -> tuple[int, ...]:
    return _parse_vector(text)


def _parse_char(text: str) -> int:
    try:
        char = int(text)
    except ValueError:
        raise ValueError(f"bad characteristic {text!r}") from None
    if char < 0:
        raise ValueError(f"bad characteristic {text!r}")
    return char


def _parse_names(text: str) -> tuple[str, ...]:
    names = tuple(p.strip() for p in text.split(","))
    if not names or any(not nm for nm in names):
        raise ValueError(f"bad variable list {text!r}")
    return names


def _domain(char: int) -> CoeffDomain:
    return QQ if char == 0 else GF(char)


def _variable_index(names: Sequence[str], name: str) -> int:
    try:
        return names.index(name)
    except ValueError:
        raise ValueError(f"unknown variable {name!r}; "
                         f"ring has {', '.join(names)}") from None


def _split_list(text: str) -> tuple[str, ...]:
    """Split a comma-separated polynomial list into items; commas never
    occur inside a polynomial, so a flat split is exact."""
    items = tuple(p.strip() for p in text.split(","))
    if any(not p for p in items):
        raise ValueError(f"empty entry in list {text!r}")
    return items


def _ideal_text(args: argparse.Namespace) -> str:
    if getattr(args, "ideal", None) is not None:
        return args.ideal
    with open(args.ideal_file, "r", encoding="utf-8") as fh:
        return fh.read()


def _parsed_ideal(args: argparse.Namespace, domain: CoeffDomain
                  ) -> tuple[PolyRing, Ideal]:
    ring = PolyRing(_parse_names(args.ring), domain)
    gens = parse_polynomial_list(_ideal_text(args), ring)
    return ring, Ideal(ring, tuple(gens))


# ---------------------------------------------------------------------------
# subcommand handlers: each returns the report dict
# ---------------------------------------------------------------------------

def _cmd_veronese_ideal(args: argparse.Namespace) -> dict:
    k, n = args.k, args.n
    if k < 1 or n < 1:
        raise ValueError("k and n must both be at least 1")
    ensure_within_cap(comb(k + n - 1, n))
    char = _parse_char(args.char)
    dom = _domain(char)
    mmap = veronese_map(k, n)
    ideal = toric_ideal_elimination(mmap, dom)
    lattice = toric_ideal_lattice(mmap, dom)
    mingens = minimal_generators(ideal)
    dims = krull_dim(ideal)
    checks = [
        _check("toric_routes_agree", ideal_equal(ideal, lattice),
               minimal_generators=[str(g) for g in mingens],
               minimal_generator_count=len(mingens)),
        _check("height_matches", dims.height == mmap.d - k,
               height=dims.height, expected=mmap.d - k,
               dimension=dims.dimension),
    ]
    params = {"k": k, "n": n, "d": mmap.d, "characteristic": char}
    return _assemble("veronese-ideal", params, checks, ())


def _cmd_present(args: argparse.Namespace) -> dict:
    targets = _parse_targets(args.targets)
    primes = _parse_primes(args.primes)
    names = tuple(f"t{i + 1}" for i in range(len(targets)))
    subset: Optional[tuple[int, ...]] = None
    if args.radical_subset is not None:
        subset = tuple(_variable_index(names, nm)
                       for nm in _parse_names(args.radical_subset))
    candidates: Optional[dict[int, tuple[str, ...]]] = None
    if args.ci:
        candidates = {}
        for entry in args.ci:
            head, sep, tail = entry.partition(":")
            if not sep or not tail.strip():
                raise ValueError(
                    f"bad --ci {entry!r}; expected variable:poly,poly")
            idx = _variable_index(names, head.strip())
            if idx in candidates:
                raise ValueError(f"repeated --ci variable {head.strip()!r}")
            candidates[idx] = _split_list(tail)
    witness = None
    if args.fpurity_witness is not None:
        pair = _parse_targets(args.fpurity_witness)
        if len(pair) != 2:
            raise ValueError(
                "--fpurity-witness wants two vectors: numerator;generator")
        witness = (pair[0], pair[1])
    report = present_monomial_algebra(
        targets, primes=primes, radical_subset=subset,
        ci_candidates=candidates, fpurity_witness=witness)
    return report.to_report()


def _cmd_height(args: argparse.Namespace) -> dict:
    char = _parse_char(args.char)
    ring, ideal = _parsed_ideal(args, _domain(char))
    dims = krull_dim(ideal)
    checks = [_check("height_computed", True,
                     height=dims.height, dimension=dims.dimension)]
    params = {"ring": list(ring.names), "characteristic": char}
    return _assemble("height", params, checks, ())


def _cmd_ci_check(args: argparse.Namespace) -> dict:
    char = _parse_char(args.char)
    ring, ideal = _parsed_ideal(args, _domain(char))
    idx = _variable_index(ring.names, args.invert)
    cands = tuple(parse_polynomial_list(args.candidates, ring))
    rep = ci_check(ideal, cands, idx)
    checks = [_check(
        "localized_complete_intersection", bool(rep.verified),
        inverted=ring.names[idx],
        candidates=[str(f) for f in rep.candidates],
        candidates_in_ideal=rep.candidates_in_ideal,
        generates_after_saturation=rep.generates_after_saturation,
        count_matches_height=rep.count_matches_height)]
    params = {"ring": list(ring.names), "characteristic": char,
              "invert": ring.names[idx]}
    return _assemble("ci-check", params, checks, ())


def _cmd_radical_cover(args: argparse.Namespace) -> dict:
    char = _parse_char(args.char)
    ring, ideal = _parsed_ideal(args, _domain(char))
    subset = tuple(_variable_index(ring.names, nm)
                   for nm in _parse_names(args.subset))
    ok, witnesses = _radical_cover(ideal, subset)
    checks = [_check("radical_cover", ok,
                     subset=[ring.names[i] for i in subset],
                     witnesses=witnesses)]
    params = {"ring": list(ring.names), "characteristic": char}
    return _assemble("radical-cover", params, checks, ())


def _cmd_fedder(args: argparse.Namespace) -> dict:
    p = args.p
    ring, ideal = _parsed_ideal(args, GF(p))
    rep = fedder_fpure(ideal, p)
    checks = [_check(
        f"f_pure_p{p}", rep.f_pure,
        certificate=None if rep.certificate is None else str(rep.certificate),
        colon_generators=len(rep.colon_generators))]
    params = {"ring": list(ring.names), "p": p}
    return _assemble("fedder", params, checks, ())


def _cmd_semigroup(args: argparse.Namespace) -> dict:
    sg = AffineSemigroup(_parse_targets(args.generators))
    target = _parse_vector(args.target)
    member, witness = semigroup_member(sg, target)
    checks = [_check(
        "target_in_semigroup", member,
        target=list(target),
        witness=None if witness is None else [list(g) for g in witness])]
    params = {"generators": [list(g) for g in sg.generators]}
    return _assemble("semigroup", params, checks, ())


def _cmd_cd_certificate(args: argparse.Namespace) -> dict:
    primes = _parse_primes(args.primes)
    return cd_certificate(args.k, args.n, primes).to_report()


def _cmd_char_compare(args: argparse.Namespace) -> dict:
    primes = _parse_primes(args.primes)
    if args.targets is not None:
        if args.ring is not None or args.ideal is not None \
                or args.ideal_file is not None:
            raise ValueError("give either --targets or --ring with an ideal")
        report = char_compare(_parse_targets(args.targets), primes=primes)
    else:
        if args.ring is None:
            raise ValueError("give either --targets or --ring with an ideal")
        report = char_compare(
            ring_names=_parse_names(args.ring),
            generators=_split_list(_ideal_text(args)),
            primes=primes)
    return report.to_report()


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_out_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", metavar="FILE",
                     help="write the JSON report here instead of stdout")
    sub.add_argument("--timing", action="store_true",
                     help="append elapsed_seconds to the report")


def _add_ideal_flags(sub: argparse.ArgumentParser, required: bool = True) -> None:
    group = sub.add_mutually_exclusive_group(required=required)
    group.add_argument("--ideal", metavar="POLYS",
                       help="comma-separated generators")
    group.add_argument("--ideal-file", metavar="FILE",
                       help="file containing comma-separated generators")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="veronese",
        description="exact toric presentations and cohomological-dimension "
                    "certificates for monomial algebras")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("veronese-ideal",
                          help="both toric routes for a Veronese map")
    sub.add_argument("-k", type=int, required=True, help="ambient variables")
    sub.add_argument("-n", type=int, required=True, help="Veronese degree")
    sub.add_argument("--char", default="0", help="0 or a prime (default 0)")
    sub.set_defaults(handler=_cmd_veronese_ideal)
    _add_out_flags(sub)

    sub = subs.add_parser("present",
                          help="presentation report for a monomial algebra")
    sub.add_argument("--targets", required=True,
                     help='exponent vectors, e.g. "4,0;3,1;1,3;0,4"')
    sub.add_argument("--primes", default="2,3,5",
                     help="comma-separated primes (default 2,3,5)")
    sub.add_argument("--radical-subset", metavar="VARS",
                     help='cover variables, e.g. "t1,t4"')
    sub.add_argument("--ci", action="append", metavar="VAR:POLYS",
                     help='candidates per inverted variable, e.g. '
                          '"t1:t2^3-t1^2*t3,t2*t3-t1*t4"; repeatable')
    sub.add_argument("--fpurity-witness", metavar="VEC;VEC",
                     help='numerator;generator pair, e.g. "6,2;4,0"')
    sub.set_defaults(handler=_cmd_present)
    _add_out_flags(sub)

    sub = subs.add_parser("height", help="Krull dimension and height")
    sub.add_argument("--ring", required=True, help='variables, e.g. "u,v,w"')
    _add_ideal_flags(sub)
    sub.add_argument("--char", default="0", help="0 or a prime (default 0)")
    sub.set_defaults(handler=_cmd_height)
    _add_out_flags(sub)

    sub = subs.add_parser("ci-check",
                          help="verify a localized complete intersection")
    sub.add_argument("--ring", required=True)
    _add_ideal_flags(sub)
    sub.add_argument("--invert", required=True, metavar="VAR")
    sub.add_argument("--candidates", required=True, metavar="POLYS")
    sub.add_argument("--char", default="0")
    sub.set_defaults(handler=_cmd_ci_check)
    _add_out_flags(sub)

    sub = subs.add_parser("radical-cover",
                          help="is every variable in rad(I + subset)?")
    sub.add_argument("--ring", required=True)
    _add_ideal_flags(sub)
    sub.add_argument("--subset", required=True, metavar="VARS")
    sub.add_argument("--char", default="0")
    sub.set_defaults(handler=_cmd_radical_cover)
    _add_out_flags(sub)

    sub = subs.add_parser("fedder", help="Fedder F-purity test")
    sub.add_argument("--ring", required=True)
    _add_ideal_flags(sub)
    sub.add_argument("--p", type=int, required=True, help="the prime")
    sub.set_defaults(handler=_cmd_fedder)
    _add_out_flags(sub)

    sub = subs.add_parser("semigroup", help="affine semigroup membership")
    sub.add_argument("--generators", required=True,
                     help='generator vectors, e.g. "4,0;3,1;1,3;0,4"')
    sub.add_argument("--target", required=True, help='vector, e.g. "2,2"')
    sub.set_defaults(handler=_cmd_semigroup)
    _add_out_flags(sub)

    sub = subs.add_parser("cd-certificate",
                          help="cohomological-dimension certificate")
    sub.add_argument("-k", type=int, required=True)
    sub.add_argument("-n", type=int, required=True)
    sub.add_argument("--primes", default="2,3,5")
    sub.set_defaults(handler=_cmd_cd_certificate)
    _add_out_flags(sub)

    sub = subs.add_parser("char-compare",
                          help="heights across characteristics")
    sub.add_argument("--targets", help="toric fixture: exponent vectors")
    sub.add_argument("--ring", help="ideal fixture: variables")
    _add_ideal_flags(sub, required=False)
    sub.add_argument("--primes", default="2,3,5")
    sub.set_defaults(handler=_cmd_char_compare)
    _add_out_flags(sub)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.handler(args)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.timing:
        report["elapsed_seconds"] = round(time.perf_counter() - start, 3)
    text = render_json(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["verdict"] else 1


if __name__ == "__main__":
    sys.exit(main())

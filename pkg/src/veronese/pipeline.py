"""End-to-end certificates: cohomological-dimension reports for Veronese
presentation ideals, presentation reports for general monomial algebras, and
height comparison across characteristics.

Every check inside a report is verified mechanically here, in exact
arithmetic.  Facts consumed from the literature (and the glue between the
checks) are listed explicitly in ``cited_facts`` so the boundary between
computed and quoted mathematics stays visible.  All reports share one JSON
envelope:

    {"kind": ..., "params": {...},
     "checks": [{"name": ..., "verdict": ..., "details": {...}}, ...],
     "cited_facts": [...], "verdict": ...}

and the overall verdict is the conjunction of the check verdicts.  Reports
are deterministic: identical inputs give byte-identical JSON.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Mapping, Optional, Sequence

from .polycore import CoeffDomain, GF, GrevLex, PolyRing, QQ, is_homogeneous
from .groebner import (
    Ideal, _least_power_member, buchberger, ideal_equal, ideal_sum,
    radical_member,
)
from .toric import (
    MonomialMap, _veronese_targets, ci_check, ci_sequence, integer_kernel,
    integer_solve, minimal_generators, monomial_algebra_map,
    symmetric_minors_ideal, toric_ideal_elimination, toric_ideal_lattice,
    veronese_map,
)
from .invariants import krull_dim, veronese_lc_piece
from .charp import AffineSemigroup, fedder_fpure, semigroup_member

__all__ = [
    "Check", "ResourceCapError", "CdCertificate", "PresentationReport",
    "CharCompareReport", "cd_certificate", "present_monomial_algebra",
    "radical_cover_check", "char_compare", "render_json", "ensure_within_cap",
    "VARIABLE_CAP",
    "QUARTIC_CURVE_TARGETS", "GENERIC_2X3_NAMES", "GENERIC_2X3_GENERATORS",
]

_GREVLEX = GrevLex()

#: hard cap on source variables; larger requests are refused, not truncated
VARIABLE_CAP = 12

#: bound on the multiple searched when certifying saturation membership
_MULTIPLE_CAP = 12

# fixtures ------------------------------------------------------------------

#: degree-4 monomial curve with a single gap in its semigroup
QUARTIC_CURVE_TARGETS: tuple[tuple[int, ...], ...] = ((4, 0), (3, 1), (1, 3), (0, 4))

#: 2x2 minors of a generic 2x3 matrix [[u, v, w], [x, y, z]]
GENERIC_2X3_NAMES: tuple[str, ...] = ("u", "v", "w", "x", "y", "z")
GENERIC_2X3_GENERATORS: tuple[str, ...] = ("v*z - w*y", "w*x - u*z", "u*y - v*x")


class ResourceCapError(RuntimeError):
    """A request exceeded the source-variable cap; refused outright."""


@dataclass(frozen=True)
class Check:
    """One named, mechanically verified sub-verdict of a report."""

    name: str
    verdict: bool
    details: Mapping[str, object]

    def as_dict(self) -> dict:
        return {"name": self.name, "verdict": self.verdict,
                "details": dict(self.details)}


def _check(name: str, verdict: bool, **details: object) -> Check:
    return Check(name=name, verdict=bool(verdict), details=details)


def _assemble(kind: str, params: dict, checks: Sequence[Check],
              cited_facts: Sequence[str]) -> dict:
    return {
        "kind": kind,
        "params": params,
        "checks": [c.as_dict() for c in checks],
        "cited_facts": list(cited_facts),
        "verdict": all(c.verdict for c in checks),
    }


def render_json(report: Mapping[str, object]) -> str:
    """Canonical JSON rendering: fixed insertion order, two-space indent,
    trailing newline, no timestamps."""
    return json.dumps(report, indent=2) + "\n"


def ensure_within_cap(d: int) -> None:
    """Refuse, never truncate, any request over the source-variable cap."""
    if d > VARIABLE_CAP:
        raise ResourceCapError(
            f"{d} source variables exceeds the cap of {VARIABLE_CAP}")


def _characteristics(primes: Sequence[int]) -> list[tuple[int, CoeffDomain]]:
    """Characteristic zero first, then the primes ascending, deduplicated.
    Primality is validated by the field constructor."""
    if not primes:
        raise ValueError("at least one prime is required")
    ps = sorted({int(p) for p in primes})
    return [(0, QQ)] + [(p, GF(p)) for p in ps]


def _pure_power_indices(mmap: MonomialMap) -> tuple[int, ...]:
    """Indices of source variables whose image is a power of one variable."""
    return tuple(i for i, t in enumerate(mmap.targets)
                 if sum(1 for e in t if e) == 1)


# ---------------------------------------------------------------------------
# radical cover
# ---------------------------------------------------------------------------

def _radical_cover(ideal: Ideal, subset: tuple[int, ...]
                   ) -> tuple[bool, list[dict]]:
    """Does every ring variable lie in rad(I + (subset variables))?

    For homogeneous input the verdict is a dimension computation: the radical
    contains every variable exactly when the quotient by I + (subset) is
    zero-dimensional.  Witness exponents are then found by power reduction
    against one cached basis.  Non-homogeneous input, and the failing case,
    fall back to one radical-membership run per variable.
    """
    ring = ideal.ring
    subset = tuple(dict.fromkeys(subset))
    if not subset:
        raise ValueError("the cover subset must be nonempty")
    for i in subset:
        if not 0 <= i < ring.arity:
            raise ValueError(f"variable index {i} out of range")
    J = ideal_sum(ideal, Ideal(ring, tuple(ring.variable(i) for i in subset)))
    gb = buchberger(J, _GREVLEX)
    if any(g.total_degree() == 0 for g in gb.elements):
        return True, [{"variable": nm, "member": True, "exponent": 1}
                      for nm in ring.names]
    if all(is_homogeneous(g) for g in ideal.generators):
        if krull_dim(J).dimension == 0:
            details = []
            for i, nm in enumerate(ring.names):
                e = _least_power_member(ring.variable(i), gb)
                details.append({"variable": nm, "member": True, "exponent": e})
            return True, details
    ok = True
    details = []
    for i, nm in enumerate(ring.names):
        member, e = radical_member(ring.variable(i), J)
        ok = ok and member
        details.append({"variable": nm, "member": member, "exponent": e})
    return ok, details


def radical_cover_check(ideal: Ideal, subset: Sequence[int]) -> bool:
    """True iff every ring variable lies in the radical of
    I + (the subset variables); the reverse containment is automatic."""
    ok, _ = _radical_cover(ideal, tuple(subset))
    return ok


# ---------------------------------------------------------------------------
# cited facts
# ---------------------------------------------------------------------------

_CITED_LOWER_BOUND = (
    "lower bound: local cohomology supported in an ideal of a polynomial "
    "ring is nonzero at the height, so the cohomological dimension is at "
    "least the height (Grothendieck; consumed, not computed).")

_CITED_HOCHSTER_CM = (
    "Cohen-Macaulayness: normal affine semigroup rings, Veronese rings "
    "included, are Cohen-Macaulay (Hochster; consumed, not computed).")

_CITED_PESKINE_SZPIRO = (
    "positive characteristic: over a regular ring of characteristic p, "
    "local cohomology supported in an ideal with Cohen-Macaulay quotient "
    "vanishes strictly above the height (Peskine-Szpiro Frobenius argument; "
    "consumed, not computed).")

_CITED_CHAR_ZERO = (
    "characteristic zero: vanishing above the height reduces to the "
    "vanishing of the degree-zero graded piece of top local cohomology of "
    "the quotient (Ogus-style criterion; consumed).  That degree-zero piece "
    "is computed exactly in this report by a closed form.")

_CITED_COVER_GLUE = (
    "localization cover: on each chart where a certified pure-power "
    "variable is inverted, the certified candidates generate the ideal, so "
    "it is there a set-theoretic complete intersection of length equal to "
    "the height; with the radical cover this confines local cohomology "
    "above the height to the irrelevant maximal ideal (charts and "
    "candidates certified computationally here; the gluing argument is "
    "standard and consumed).")

_CITED_DUALITY = (
    "graded duality: the closed form for graded pieces of top local "
    "cohomology of a polynomial ring mirrors Hilbert function pieces under "
    "a sign flip; both sides are computed and compared in the library's "
    "test suite (duality statement consumed).")

_CITED_VERTEX_KILL = (
    "vertex kill: graded local cohomology confined to the vertex and "
    "vanishing in degree zero for the certified normalization vanishes "
    "outright; the degree-zero piece is computed here, the graded argument "
    "is consumed.")

_CITED_FROBENIUS_PURITY = (
    "Frobenius purity: over an F-pure ring, a monomial containment after "
    "scaling all exponents by p forces the base containment; the recorded "
    "witness pair applies the contrapositive (consumed).")

_CITED_CONCLUSION = (
    "conclusion: with every check above true, the cohomological dimension "
    "of the presentation ideal equals its height; the certified value is "
    "recorded in params as cohomological_dimension.")

_CITED_CD_JUMP = (
    "cohomological dimension can depend on the characteristic even when "
    "the height does not: for the 2x2 minors of a generic 2x3 matrix it "
    "exceeds the height exactly in characteristic zero (Hochster's "
    "comparison; consumed as context, only heights are computed here).")

_CD_CITED_FACTS = (
    _CITED_LOWER_BOUND, _CITED_HOCHSTER_CM, _CITED_PESKINE_SZPIRO,
    _CITED_CHAR_ZERO, _CITED_COVER_GLUE, _CITED_DUALITY, _CITED_CONCLUSION,
)

_PRESENT_CITED_FACTS = (
    _CITED_LOWER_BOUND, _CITED_COVER_GLUE, _CITED_VERTEX_KILL,
    _CITED_FROBENIUS_PURITY, _CITED_CONCLUSION,
)

_CHAR_COMPARE_CITED_FACTS = (_CITED_CD_JUMP,)


# ---------------------------------------------------------------------------
# cohomological-dimension certificate for Veronese ideals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CdCertificate:
    """Certificate that cohomological dimension equals height for the
    presentation ideal of a Veronese map, assembled from per-characteristic
    checks plus the two closed-form graded computations."""

    k: int
    n: int
    d: int
    height: int
    characteristics: tuple[int, ...]
    checks: tuple[Check, ...]
    cited_facts: tuple[str, ...]
    verdict: bool

    def to_report(self) -> dict:
        params = {
            "k": self.k,
            "n": self.n,
            "d": self.d,
            "height": self.height,
            "cohomological_dimension": self.height if self.verdict else None,
            "characteristics": list(self.characteristics),
        }
        return _assemble("cd_certificate", params, self.checks, self.cited_facts)


def cd_certificate(k: int, n: int, primes: Sequence[int] = (2, 3, 5)
                   ) -> CdCertificate:
    """Run every desk-checkable ingredient of the equality cd = height for
    the degree-n Veronese presentation ideal in k ambient variables, over
    the rationals and over each requested prime field."""
    if k < 1 or n < 1:
        raise ValueError("k and n must both be at least 1")
    ensure_within_cap(comb(k + n - 1, n))
    mmap = veronese_map(k, n)
    doms = _characteristics(primes)
    expected = mmap.d - k
    checks: list[Check] = []
    heights: dict[int, int] = {}

    for char, dom in doms:
        label = f"char_{char}"
        ideal = toric_ideal_elimination(mmap, dom)
        lattice = toric_ideal_lattice(mmap, dom)
        route_details: dict[str, object] = {
            "generators": len(ideal.generators),
            "lattice_generators": len(lattice.generators),
        }
        if char == 0:
            mingens = minimal_generators(ideal)
            route_details["minimal_generators"] = [str(g) for g in mingens]
            route_details["minimal_generator_count"] = len(mingens)
        checks.append(_check(f"toric_routes_agree_{label}",
                             ideal_equal(ideal, lattice), **route_details))

        dims = krull_dim(ideal)
        heights[char] = dims.height
        checks.append(_check(f"height_{label}", dims.height == expected,
                             height=dims.height, expected=expected,
                             dimension=dims.dimension))

        for j in range(k):
            rep = ci_sequence(mmap, j, dom)
            rep = ci_check(ideal, rep.candidates, rep.inverted, rep)
            name = ideal.ring.names[rep.inverted]
            ok = (bool(rep.verified) and rep.note is None
                  and len(rep.candidates) == expected)
            checks.append(_check(
                f"localized_ci_{label}_{name}", ok,
                inverted=name,
                pure_power_of=f"x{j + 1}",
                candidates=[str(f) for f in rep.candidates],
                candidates_in_ideal=rep.candidates_in_ideal,
                generates_after_saturation=rep.generates_after_saturation,
                count_matches_height=rep.count_matches_height))

        subset = _pure_power_indices(mmap)
        ok, witnesses = _radical_cover(ideal, subset)
        checks.append(_check(
            f"radical_cover_{label}", ok,
            subset=[ideal.ring.names[i] for i in subset],
            witnesses=witnesses))

    checks.append(_check(
        "height_constant_across_characteristics",
        len(set(heights.values())) == 1,
        heights={str(c): h for c, h in heights.items()}))

    if n == 2:
        minors = symmetric_minors_ideal(k, QQ)
        checks.append(_check(
            "symmetric_minors_match",
            ideal_equal(toric_ideal_elimination(mmap, QQ), minors),
            minor_count=len(minors.generators)))

    pieces = [veronese_lc_piece(k, n, i, 0).dimension for i in range(k + 1)]
    checks.append(_check(
        "lc_degree_zero_vanishes", all(v == 0 for v in pieces),
        cohomological_indices=list(range(k + 1)), dimensions=pieces))

    for char, dom in doms[1:]:
        rep = fedder_fpure(toric_ideal_elimination(mmap, dom), char)
        checks.append(_check(
            f"f_pure_p{char}", rep.f_pure,
            certificate=None if rep.certificate is None else str(rep.certificate),
            colon_generators=len(rep.colon_generators)))

    return CdCertificate(
        k=k, n=n, d=mmap.d, height=expected,
        characteristics=tuple(c for c, _ in doms),
        checks=tuple(checks),
        cited_facts=_CD_CITED_FACTS,
        verdict=all(c.verdict for c in checks),
    )


# ---------------------------------------------------------------------------
# presentation report for a general monomial algebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PresentationReport:
    """Presentation of a monomial algebra with per-characteristic checks,
    optional localization certificates, radical cover, F-purity data, and,
    when certifiable, the normalization's degree-zero computation."""

    targets: tuple[tuple[int, ...], ...]
    characteristics: tuple[int, ...]
    height: Optional[int]
    cohomological_dimension: Optional[int]
    checks: tuple[Check, ...]
    cited_facts: tuple[str, ...]
    verdict: bool

    def to_report(self) -> dict:
        params = {
            "targets": [list(t) for t in self.targets],
            "characteristics": list(self.characteristics),
            "height": self.height,
            "cohomological_dimension": self.cohomological_dimension,
        }
        return _assemble("presentation", params, self.checks, self.cited_facts)


def present_monomial_algebra(
        targets: Sequence[Sequence[int]],
        primes: Sequence[int] = (2, 3, 5),
        radical_subset: Optional[Sequence[int]] = None,
        ci_candidates: Optional[Mapping[int, Sequence[str]]] = None,
        fpurity_witness: Optional[tuple[Sequence[int], Sequence[int]]] = None,
) -> PresentationReport:
    """Present the algebra generated by the target monomials and certify
    everything that can be checked at desk scale.

    ``radical_subset`` and the keys of ``ci_candidates`` are 0-based source
    variable indices; candidate polynomials are strings in t1..td, parsed
    separately over every characteristic.  ``fpurity_witness`` is a pair
    (numerator vector, generator vector) of semigroup elements whose failed
    base containment plus successful p-fold containment certifies
    non-F-purity.  Both default to the pure-power charts when the map is a
    Veronese map, and are skipped otherwise.
    """
    ensure_within_cap(len(targets))
    mmap = monomial_algebra_map(targets)
    doms = _characteristics(primes)
    checks: list[Check] = []
    heights: dict[int, int] = {}

    nullity = len(integer_kernel(mmap.targets))
    is_veronese = mmap.veronese_degree() is not None

    if ci_candidates is None and is_veronese:
        derived_ci = True
        ci_indices: tuple[int, ...] = tuple(range(mmap.k))
    else:
        derived_ci = False
        ci_indices = tuple(sorted(ci_candidates)) if ci_candidates else ()

    if radical_subset is not None:
        subset = tuple(dict.fromkeys(int(i) for i in radical_subset))
    else:
        subset = _pure_power_indices(mmap) if is_veronese else ()

    for char, dom in doms:
        label = f"char_{char}"
        ideal = toric_ideal_elimination(mmap, dom)
        lattice = toric_ideal_lattice(mmap, dom)
        route_details: dict[str, object] = {
            "generators": len(ideal.generators),
            "lattice_generators": len(lattice.generators),
        }
        if char == 0:
            mingens = minimal_generators(ideal)
            route_details["minimal_generators"] = [str(g) for g in mingens]
            route_details["minimal_generator_count"] = len(mingens)
        checks.append(_check(f"toric_routes_agree_{label}",
                             ideal_equal(ideal, lattice), **route_details))

        dims = krull_dim(ideal) if not ideal.is_zero() else None
        height = (mmap.d - dims.dimension) if dims else 0
        heights[char] = height
        checks.append(_check(
            f"height_matches_lattice_nullity_{label}", height == nullity,
            height=height, lattice_nullity=nullity))

        for idx in ci_indices:
            if derived_ci:
                rep = ci_sequence(mmap, idx, dom)
                rep = ci_check(ideal, rep.candidates, rep.inverted, rep)
                ok = bool(rep.verified) and rep.note is None
                invert = rep.inverted
            else:
                cands = tuple(ideal.ring.parse(s) for s in ci_candidates[idx])
                rep = ci_check(ideal, cands, idx)
                ok = bool(rep.verified)
                invert = idx
            name = ideal.ring.names[invert]
            checks.append(_check(
                f"localized_ci_{label}_{name}", ok,
                inverted=name,
                candidates=[str(f) for f in rep.candidates],
                candidates_in_ideal=rep.candidates_in_ideal,
                generates_after_saturation=rep.generates_after_saturation,
                count_matches_height=rep.count_matches_height))

        if subset:
            ok, witnesses = _radical_cover(ideal, subset)
            checks.append(_check(
                f"radical_cover_{label}", ok,
                subset=[ideal.ring.names[i] for i in subset],
                witnesses=witnesses))

    checks.append(_check(
        "height_constant_across_characteristics",
        len(set(heights.values())) == 1,
        heights={str(c): h for c, h in heights.items()}))

    # normalization certification: common degree, lattice equality, and a
    # bounded multiple search for each missing degree-n monomial.  When it
    # fails, no claim (and no check) is emitted.
    degree = mmap.common_degree()
    normalization_certified = False
    if degree is not None:
        ver = _veronese_targets(mmap.k, degree)
        have = set(mmap.targets)
        missing = [v for v in ver if v not in have]
        lattice_ok = all(integer_solve(mmap.targets, v) is not None
                         for v in missing)
        sg = AffineSemigroup(mmap.targets)
        multiples: list[Optional[int]] = []
        for v in missing:
            found = None
            for m in range(1, _MULTIPLE_CAP + 1):
                if semigroup_member(sg, tuple(m * e for e in v))[0]:
                    found = m
                    break
            multiples.append(found)
        if lattice_ok and all(m is not None for m in multiples):
            normalization_certified = True
            checks.append(_check(
                "normalization_is_veronese", True,
                degree=degree,
                missing_degree_n_targets=[list(v) for v in missing],
                member_multiples=multiples))
            pieces = [veronese_lc_piece(mmap.k, degree, i, 0).dimension
                      for i in range(mmap.k + 1)]
            checks.append(_check(
                "normalization_lc_degree_zero_vanishes",
                all(v == 0 for v in pieces),
                cohomological_indices=list(range(mmap.k + 1)),
                dimensions=pieces))

    witness_base: Optional[tuple[int, ...]] = None
    witness_gen: Optional[tuple[int, ...]] = None
    if fpurity_witness is not None:
        pair = tuple(fpurity_witness)
        if len(pair) != 2:
            raise ValueError("the purity witness must be a pair of vectors")
        witness_base = tuple(int(e) for e in pair[0])
        witness_gen = tuple(int(e) for e in pair[1])
        sg = AffineSemigroup(mmap.targets)
        if len(witness_base) != mmap.k or len(witness_gen) != mmap.k:
            raise ValueError("witness vectors must match the target arity")

    for char, dom in doms[1:]:
        rep = fedder_fpure(toric_ideal_elimination(mmap, dom), char)
        details: dict[str, object] = {
            "f_pure": rep.f_pure,
            "certificate": None if rep.certificate is None else str(rep.certificate),
            "colon_generators": len(rep.colon_generators),
        }
        if fpurity_witness is None:
            checks.append(_check(f"f_purity_recorded_p{char}", True, **details))
            continue
        valid = (semigroup_member(sg, witness_base)[0]
                 and semigroup_member(sg, witness_gen)[0])
        residual = tuple(a - b for a, b in zip(witness_base, witness_gen))
        if any(e < 0 for e in residual):
            base_in = False
            pfold_in = False
        else:
            base_in = semigroup_member(sg, residual)[0]
            pfold_in = semigroup_member(
                sg, tuple(char * e for e in residual))[0]
        implies_not_f_pure = valid and (not base_in) and pfold_in
        consistent = (not implies_not_f_pure) or (not rep.f_pure)
        checks.append(_check(
            f"f_purity_consistent_p{char}", valid and consistent,
            **details,
            witness_numerator=list(witness_base),
            witness_generator=list(witness_gen),
            witness_in_semigroup=valid,
            residual=list(residual),
            base_containment=base_in,
            pfold_containment=pfold_in,
            implies_not_f_pure=implies_not_f_pure))

    verdict = all(c.verdict for c in checks)
    height = heights[0] if len(set(heights.values())) == 1 else None
    concluded = (verdict and height is not None and bool(ci_indices)
                 and bool(subset) and normalization_certified)
    return PresentationReport(
        targets=mmap.targets,
        characteristics=tuple(c for c, _ in doms),
        height=height,
        cohomological_dimension=height if concluded else None,
        checks=tuple(checks),
        cited_facts=_PRESENT_CITED_FACTS,
        verdict=verdict,
    )


# ---------------------------------------------------------------------------
# characteristic comparison
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharCompareReport:
    """Heights of one ideal fixture computed over the rationals and over
    each prime field, with the constancy flag."""

    description: str
    characteristics: tuple[int, ...]
    heights: tuple[int, ...]
    constant: bool
    checks: tuple[Check, ...]
    cited_facts: tuple[str, ...]
    verdict: bool

    def to_report(self) -> dict:
        params = {
            "description": self.description,
            "characteristics": list(self.characteristics),
            "heights": list(self.heights),
            "constant": self.constant,
        }
        return _assemble("char_compare", params, self.checks, self.cited_facts)


def char_compare(targets: Optional[Sequence[Sequence[int]]] = None,
                 *,
                 ring_names: Optional[Sequence[str]] = None,
                 generators: Optional[Sequence[str]] = None,
                 primes: Sequence[int] = (2, 3, 5)) -> CharCompareReport:
    """Compare heights across characteristics, either of the toric ideal of
    target monomials (both routes cross-checked per characteristic) or of an
    ideal given by generator strings re-parsed over every field."""
    doms = _characteristics(primes)
    checks: list[Check] = []
    heights: list[int] = []

    fixture_mode = ring_names is not None or generators is not None
    if (targets is None) == (not fixture_mode):
        raise ValueError("give exactly one of targets or ring_names+generators")
    if targets is not None:
        ensure_within_cap(len(targets))
        mmap = monomial_algebra_map(targets)
        description = "toric ideal of " + "; ".join(
            ",".join(str(e) for e in t) for t in mmap.targets)
        for char, dom in doms:
            ideal = toric_ideal_elimination(mmap, dom)
            lattice = toric_ideal_lattice(mmap, dom)
            checks.append(_check(f"toric_routes_agree_char_{char}",
                                 ideal_equal(ideal, lattice)))
            dims = krull_dim(ideal) if not ideal.is_zero() else None
            heights.append((mmap.d - dims.dimension) if dims else 0)
    else:
        if ring_names is None or generators is None:
            raise ValueError("ring_names and generators go together")
        names = tuple(ring_names)
        ensure_within_cap(len(names))
        description = f"ideal ({', '.join(generators)}) in {', '.join(names)}"
        for char, dom in doms:
            ring = PolyRing(names, dom)
            gens = tuple(ring.parse(s) for s in generators)
            ideal = Ideal(ring, gens)
            dims = krull_dim(ideal) if not ideal.is_zero() else None
            heights.append((len(names) - dims.dimension) if dims else 0)

    constant = len(set(heights)) == 1
    checks.append(_check(
        "height_constant_across_characteristics", constant,
        heights={str(c): h for (c, _), h in zip(doms, heights)}))

    return CharCompareReport(
        description=description,
        characteristics=tuple(c for c, _ in doms),
        heights=tuple(heights),
        constant=constant,
        checks=tuple(checks),
        cited_facts=_CHAR_COMPARE_CITED_FACTS,
        verdict=all(c.verdict for c in checks),
    )

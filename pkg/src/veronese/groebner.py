"""Deterministic Buchberger engine and ideal-theoretic operations.

The engine keeps every basis element monic with its tail stored separately,
memoizes order keys, and prunes S-pairs with the Gebauer-Moller update
(Buchberger's coprime and chain criteria).  Output bases are reduced, monic
and canonically sorted, so two runs with different generator orders or
selection strategies agree structurally.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .polycore import (
    Block, GrevLex, MonomialOrder, PolyRing, Polynomial, Exponents, Scalar,
    divide, _from_dict,
)

__all__ = [
    "Ideal", "GroebnerBasis", "buchberger", "normal_form", "ideal_member",
    "eliminate", "intersect", "colon", "colon_ideal", "saturate",
    "radical_member", "ideal_equal", "initial_ideal", "ideal_sum",
]

_GREVLEX = GrevLex()

STRATEGIES = ("normal", "fifo")


@dataclass(frozen=True)
class Ideal:
    """Finitely generated ideal; zero generators are dropped on construction.

    An empty generator tuple is the zero ideal (elimination and lattice
    kernels produce it naturally).
    """

    ring: PolyRing
    generators: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        gens = tuple(g for g in self.generators if not g.is_zero())
        for g in gens:
            if g.ring != self.ring:
                raise ValueError("generator from a different ring")
        object.__setattr__(self, "generators", gens)

    def is_zero(self) -> bool:
        return not self.generators

    def __str__(self) -> str:
        inside = ", ".join(str(g) for g in self.generators) or "0"
        return f"({inside})"


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, inter-reduced, canonically sorted."""

    ring: PolyRing
    order: MonomialOrder
    elements: tuple[Polynomial, ...]

    def leads(self) -> tuple[Exponents, ...]:
        return tuple(g.lead_monomial(self.order) for g in self.elements)


# ---------------------------------------------------------------------------
# engine internals
# ---------------------------------------------------------------------------

def _memo_key(order: MonomialOrder):
    cache: dict[Exponents, object] = {}
    okey = order.key

    def keyf(m: Exponents):
        v = cache.get(m)
        if v is None:
            v = okey(m)
            cache[m] = v
        return v

    return keyf


def _support_mask(m: Exponents) -> int:
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


def _nf_dict(work: dict, entries: list, keyf, p: int) -> dict:
    """Full normal form of a term dict against monic basis entries.

    Each entry is (lead, lead_key, mask, deg, tail).  Deterministic: the
    current maximal term is reduced by the first entry whose lead divides it,
    in basis insertion order.
    """
    work = dict(work)
    result: dict[Exponents, Scalar] = {}
    while work:
        m = max(work, key=keyf)
        c = work.pop(m)
        mdeg = sum(m)
        mmask = _support_mask(m)
        for lead, _lk, lmask, ldeg, tail in entries:
            if ldeg > mdeg or lmask & ~mmask:
                continue
            divisible = True
            for a, b in zip(lead, m):
                if a > b:
                    divisible = False
                    break
            if not divisible:
                continue
            q = tuple(b - a for a, b in zip(lead, m))
            # work -= c * x^q * (lead + tail); the lead part is the popped term
            if p:
                for tm, tc in tail:
                    nm = tuple(x + y for x, y in zip(tm, q))
                    nv = (work.get(nm, 0) - c * tc) % p
                    if nv:
                        work[nm] = nv
                    else:
                        work.pop(nm, None)
            else:
                for tm, tc in tail:
                    nm = tuple(x + y for x, y in zip(tm, q))
                    nv = work.get(nm, 0) - c * tc
                    if nv:
                        work[nm] = nv
                    else:
                        work.pop(nm, None)
            break
        else:
            result[m] = c
    return result


class _Engine:
    def __init__(self, ring: PolyRing, order: MonomialOrder, strategy: str):
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}")
        self.ring = ring
        self.order = order
        self.strategy = strategy
        self.dom = ring.domain
        self.p = ring.domain.characteristic
        self.keyf = _memo_key(order)
        self.entries: list = []          # (lead, lead_key, mask, deg, tail)
        self.heap: list = []             # (sortkey, i, j)
        self.alive: set[tuple[int, int]] = set()
        self.lcms: dict[tuple[int, int], Exponents] = {}
        self._counter = 0

    # -- pair bookkeeping --------------------------------------------------

    def _push_pair(self, i: int, t: int, lcm: Exponents) -> None:
        self.alive.add((i, t))
        self.lcms[(i, t)] = lcm
        if self.strategy == "normal":
            sortkey = (sum(lcm), self.keyf(lcm), i, t)
        else:                            # fifo
            sortkey = (self._counter,)
            self._counter += 1
        heapq.heappush(self.heap, (sortkey, i, t))

    def _update_pairs(self, t: int) -> None:
        """Gebauer-Moller update after inserting basis element t."""
        entries = self.entries
        lead_t = entries[t][0]
        cand = []
        for i in range(t):
            lead_i = entries[i][0]
            lcm = tuple(max(a, b) for a, b in zip(lead_i, lead_t))
            coprime = all(min(a, b) == 0 for a, b in zip(lead_i, lead_t))
            cand.append((i, lcm, coprime))
        cand.sort(key=lambda x: (self.keyf(x[1]), x[0]))

        kept: list[tuple[int, Exponents, bool]] = []
        for idx, (i, lcm, coprime) in enumerate(cand):
            if coprime:
                kept.append((i, lcm, True))
                continue
            dominated = False
            for _, lcm2, _ in cand[idx + 1:]:
                if all(a <= b for a, b in zip(lcm2, lcm)):
                    dominated = True
                    break
            if not dominated:
                for _, lcm2, _ in kept:
                    if all(a <= b for a, b in zip(lcm2, lcm)):
                        dominated = True
                        break
            if not dominated:
                kept.append((i, lcm, False))

        # chain criterion against surviving old pairs
        for (i, j) in sorted(self.alive):
            lcm_ij = self.lcms[(i, j)]
            if not all(a <= b for a, b in zip(lead_t, lcm_ij)):
                continue
            lead_i = entries[i][0]
            lead_j = entries[j][0]
            lcm_it = tuple(max(a, b) for a, b in zip(lead_i, lead_t))
            lcm_jt = tuple(max(a, b) for a, b in zip(lead_j, lead_t))
            if lcm_it != lcm_ij and lcm_jt != lcm_ij:
                self.alive.discard((i, j))

        for i, lcm, coprime in kept:
            if not coprime:              # product criterion drops coprime pairs
                self._push_pair(i, t, lcm)

    # -- basis growth --------------------------------------------------------

    def insert(self, h: dict) -> None:
        """Insert a nonzero, fully reduced term dict as a new monic element."""
        lead = max(h, key=self.keyf)
        lc = h.pop(lead)
        if self.p:
            inv = pow(lc, -1, self.p)
            tail = tuple(sorted(((m, c * inv % self.p) for m, c in h.items()),
                                key=lambda t: self.keyf(t[0]), reverse=True))
        else:
            tail = tuple(sorted(((m, c / lc) for m, c in h.items()),
                                key=lambda t: self.keyf(t[0]), reverse=True))
        entry = (lead, self.keyf(lead), _support_mask(lead), sum(lead), tail)
        self.entries.append(entry)
        self._update_pairs(len(self.entries) - 1)

    def _spoly(self, i: int, j: int) -> dict:
        lead_i, _, _, _, tail_i = self.entries[i]
        lead_j, _, _, _, tail_j = self.entries[j]
        lcm = self.lcms[(i, j)]
        qi = tuple(a - b for a, b in zip(lcm, lead_i))
        qj = tuple(a - b for a, b in zip(lcm, lead_j))
        d: dict[Exponents, Scalar] = {}
        for m, c in tail_i:
            d[tuple(x + y for x, y in zip(m, qi))] = c
        p = self.p
        for m, c in tail_j:
            nm = tuple(x + y for x, y in zip(m, qj))
            nv = (d.get(nm, 0) - c) % p if p else d.get(nm, 0) - c
            if nv:
                d[nm] = nv
            else:
                d.pop(nm, None)
        return d

    def run(self, gens: Sequence[Polynomial]) -> list[dict]:
        for g in gens:
            if g.is_zero():
                continue
            h = _nf_dict(g.as_dict(), self.entries, self.keyf, self.p)
            if h:
                self.insert(h)
        while self.heap:
            _, i, j = heapq.heappop(self.heap)
            if (i, j) not in self.alive:
                continue
            self.alive.discard((i, j))
            s = self._spoly(i, j)
            if not s:
                continue
            h = _nf_dict(s, self.entries, self.keyf, self.p)
            if h:
                self.insert(h)
        return self._finalize()

    def _finalize(self) -> list[dict]:
        entries = self.entries
        n = len(entries)
        keep = []
        for i in range(n):
            lead_i = entries[i][0]
            redundant = False
            for j in range(n):
                if i == j:
                    continue
                lead_j = entries[j][0]
                if all(a <= b for a, b in zip(lead_j, lead_i)):
                    # equal leads cannot occur (new leads are always reduced),
                    # so this is strict divisibility by another lead
                    redundant = True
                    break
            if not redundant:
                keep.append(i)

        kept_entries = [entries[i] for i in keep]
        out: list[dict] = []
        for pos, entry in enumerate(kept_entries):
            lead, _, _, _, tail = entry
            others = kept_entries[:pos] + kept_entries[pos + 1:]
            reduced_tail = _nf_dict(dict(tail), others, self.keyf, self.p)
            poly = dict(reduced_tail)
            poly[lead] = self.dom.one
            out.append(poly)
        out.sort(key=lambda d: self.keyf(max(d, key=self.keyf)))
        return out


@lru_cache(maxsize=256)
def _buchberger_cached(ideal: Ideal, order: MonomialOrder, strategy: str
                       ) -> GroebnerBasis:
    engine = _Engine(ideal.ring, order, strategy)
    dicts = engine.run(ideal.generators)
    elements = tuple(_from_dict(ideal.ring, d) for d in dicts)
    return GroebnerBasis(ideal.ring, order, elements)


def buchberger(ideal: Ideal, order: MonomialOrder = _GREVLEX,
               strategy: str = "normal") -> GroebnerBasis:
    """Reduced Groebner basis of the ideal under the given order.

    The result is unique per (ideal, order): independent of generator order
    and of the S-pair selection strategy ("normal" = smallest lcm degree
    first, "fifo" = creation order).
    """
    return _buchberger_cached(ideal, order, strategy)


@lru_cache(maxsize=256)
def _gb_entries(gb: GroebnerBasis):
    keyf = _memo_key(gb.order)
    entries = []
    for g in gb.elements:
        lead = g.lead_monomial(gb.order)
        tail = tuple(t for t in g.terms if t[0] != lead)
        # elements are monic by construction
        entries.append((lead, keyf(lead), _support_mask(lead), sum(lead), tail))
    return entries, keyf


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Canonical remainder of f modulo the reduced basis."""
    if f.ring != gb.ring:
        raise ValueError("polynomial from a different ring")
    if not gb.elements:
        return f
    entries, keyf = _gb_entries(gb)
    r = _nf_dict(f.as_dict(), entries, keyf, f.ring.domain.characteristic)
    return _from_dict(f.ring, r)


def ideal_member(f: Polynomial, gb: GroebnerBasis) -> bool:
    return normal_form(f, gb).is_zero()


# ---------------------------------------------------------------------------
# ring extension helpers (single auxiliary variable, appended last)
# ---------------------------------------------------------------------------

def _fresh_name(ring: PolyRing, base: str = "w") -> str:
    i = 0
    while True:
        name = f"{base}{i}"
        if name not in ring.names:
            return name
        i += 1


def _extended_ring(ring: PolyRing) -> PolyRing:
    return PolyRing(ring.names + (_fresh_name(ring),), ring.domain)


def _lift(f: Polynomial, ext: PolyRing, w_power: int = 0) -> Polynomial:
    """Image of f in the extended ring, optionally times w^w_power."""
    return Polynomial(ext, tuple((m + (w_power,), c) for m, c in f.terms))


# ---------------------------------------------------------------------------
# elimination and the operations built on it
# ---------------------------------------------------------------------------

def eliminate(ideal: Ideal, drop: Iterable[int]) -> Ideal:
    """Intersection with the subring omitting the dropped variables.

    Returns an ideal of the smaller ring (remaining names, same domain).
    """
    ring = ideal.ring
    drop = frozenset(drop)
    if not drop:
        raise ValueError("nothing to eliminate")
    if not drop <= set(range(ring.arity)):
        raise ValueError("eliminated index out of range")
    keep = [i for i in range(ring.arity) if i not in drop]
    if not keep:
        raise ValueError("cannot eliminate every variable")
    small = PolyRing(tuple(ring.names[i] for i in keep), ring.domain)
    if ideal.is_zero():
        return Ideal(small, ())
    gb = buchberger(ideal, Block(drop, _GREVLEX))
    out = []
    for g in gb.elements:
        if all(all(m[i] == 0 for i in drop) for m, _ in g.terms):
            d = {tuple(m[i] for i in keep): c for m, c in g.terms}
            out.append(_from_dict(small, d))
    return Ideal(small, tuple(out))


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise ValueError("ideals in different rings")
    return Ideal(a.ring, a.generators + b.generators)


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """Ideal intersection via w*a + (1-w)*b and elimination of w."""
    if a.ring != b.ring:
        raise ValueError("ideals in different rings")
    ring = a.ring
    if a.is_zero() or b.is_zero():
        return Ideal(ring, ())
    ext = _extended_ring(ring)
    w = ext.variable(ext.arity - 1)
    gens = [_lift(f, ext, 1) for f in a.generators]
    gens += [(1 - w) * _lift(g, ext) for g in b.generators]
    inter = eliminate(Ideal(ext, tuple(gens)), {ext.arity - 1})
    # the eliminated ring has exactly the original names and domain
    return Ideal(ring, inter.generators)


def colon(ideal: Ideal, f: Polynomial) -> Ideal:
    """Quotient (ideal : f), computed as (ideal intersect (f)) / f."""
    if f.ring != ideal.ring:
        raise ValueError("polynomial from a different ring")
    if f.is_zero():
        raise ValueError("colon by zero")
    inter = intersect(ideal, Ideal(ideal.ring, (f,)))
    gens = []
    for g in inter.generators:
        qs, r = divide(g, [f], _GREVLEX)
        if not r.is_zero():
            raise RuntimeError("colon witness not divisible; engine bug")
        gens.append(qs[0])
    return Ideal(ideal.ring, tuple(gens))


def colon_ideal(ideal: Ideal, other: Ideal) -> Ideal:
    """Quotient (ideal : other) = intersection of (ideal : g) over generators."""
    if ideal.ring != other.ring:
        raise ValueError("ideals in different rings")
    if other.is_zero():
        return Ideal(ideal.ring, (ideal.ring.one,))
    result = None
    for g in other.generators:
        piece = colon(ideal, g)
        result = piece if result is None else intersect(result, piece)
    return result


def saturate(ideal: Ideal, f: Polynomial) -> Ideal:
    """Saturation (ideal : f^infinity) via the single auxiliary variable w:
    eliminate w from ideal + (1 - w*f)."""
    if f.ring != ideal.ring:
        raise ValueError("polynomial from a different ring")
    if f.is_zero():
        raise ValueError("saturation by zero")
    ring = ideal.ring
    ext = _extended_ring(ring)
    gens = [_lift(g, ext) for g in ideal.generators]
    gens.append(1 - _lift(f, ext, 1))
    sat = eliminate(Ideal(ext, tuple(gens)), {ext.arity - 1})
    return Ideal(ring, sat.generators)


def _nf_power(f: Polynomial, e: int, gb: GroebnerBasis) -> Polynomial:
    """Normal form of f^e, reducing after every multiplication."""
    result = f.ring.one
    base = normal_form(f, gb)
    while e:
        if e & 1:
            result = normal_form(result * base, gb)
        e >>= 1
        if e:
            base = normal_form(base * base, gb)
    return result


def radical_member(f: Polynomial, ideal: Ideal) -> tuple[bool, Union[int, None]]:
    """Is f in the radical?  Uses the Rabinowitsch trick: f is in rad(I) iff
    1 lies in I + (1 - w*f).  On success also returns the least e with
    f^e in I, found by doubling to an upper bound then binary search.
    """
    if f.ring != ideal.ring:
        raise ValueError("polynomial from a different ring")
    if f.is_zero():
        raise ValueError("radical membership of the zero polynomial")
    ring = ideal.ring
    ext = _extended_ring(ring)
    gens = [_lift(g, ext) for g in ideal.generators]
    gens.append(1 - _lift(f, ext, 1))
    gb_ext = buchberger(Ideal(ext, tuple(gens)), _GREVLEX)
    if not ideal_member(ext.one, gb_ext):
        return (False, None)
    return (True, _least_power_member(f, buchberger(ideal, _GREVLEX)))


def _least_power_member(f: Polynomial, gb: GroebnerBasis) -> int:
    """Least e >= 1 with f^e in the ideal of gb.  The caller must already
    know some power lies in the ideal; doubling finds an upper bound and a
    binary search below it finds the least (membership is monotone in e).
    """
    lo, hi = 0, 1
    g = normal_form(f, gb)
    while not g.is_zero():
        lo, hi = hi, hi * 2
        if hi > 1 << 20:
            raise RuntimeError("radical witness exponent out of range")
        g = normal_form(g * g, gb)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _nf_power(f, mid, gb).is_zero():
            hi = mid
        else:
            lo = mid
    return hi


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    """Equality as ideals: identical reduced grevlex bases."""
    if a.ring != b.ring:
        raise ValueError("ideals in different rings")
    ga = buchberger(a, _GREVLEX)
    gb = buchberger(b, _GREVLEX)
    return ga.elements == gb.elements


def initial_ideal(ideal: Ideal, order: MonomialOrder = _GREVLEX) -> Ideal:
    """Monomial ideal of lead monomials of a reduced basis."""
    gb = buchberger(ideal, order)
    ring = ideal.ring
    gens = tuple(ring.monomial(g.lead_monomial(order)) for g in gb.elements)
    return Ideal(ring, gens)

"""Exact sparse multivariate polynomials over QQ and prime fields.

Everything here is immutable and canonical: a polynomial stores its terms as a
tuple sorted in descending graded-reverse-lexicographic order, so structural
equality is mathematical equality.  Coefficients are `fractions.Fraction` over
the rationals and least nonnegative residues (plain ints) over a prime field.
No floating point anywhere.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping, Sequence, Union

Exponents = tuple[int, ...]
Scalar = Union[Fraction, int]

__all__ = [
    "Rationals", "PrimeField", "CoeffDomain", "QQ", "GF",
    "Lex", "GrevLex", "Block", "MonomialOrder", "compare_monomials",
    "PolyRing", "Polynomial", "ParseError", "parse_polynomial",
    "parse_polynomial_list", "divide", "homogeneous_degree", "is_homogeneous",
    "monomial_mul", "monomial_divides", "monomial_div", "monomial_lcm",
    "monomial_degree",
]


# ---------------------------------------------------------------------------
# coefficient domains
# ---------------------------------------------------------------------------

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for q in range(3, isqrt(p) + 1, 2):
        if p % q == 0:
            return False
    return True


@dataclass(frozen=True)
class Rationals:
    """The field QQ with Fraction scalars."""

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def normalize(self, value: Union[int, Fraction]) -> Fraction:
        return Fraction(value)

    def invert(self, value: Scalar) -> Fraction:
        if value == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return Fraction(1, 1) / Fraction(value)

    def __str__(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """The field F_p, scalars stored as least nonnegative residues."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"PrimeField needs a prime, got {self.p!r}")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def normalize(self, value: Union[int, Fraction]) -> int:
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(
                    f"denominator {value.denominator} vanishes mod {self.p}")
            return (value.numerator % self.p) * pow(den, -1, self.p) % self.p
        return value % self.p

    def invert(self, value: int) -> int:
        v = value % self.p
        if v == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.p})")
        return pow(v, -1, self.p)

    def __str__(self) -> str:
        return f"GF({self.p})"


CoeffDomain = Union[Rationals, PrimeField]

QQ = Rationals()


def GF(p: int) -> PrimeField:
    """Prime field of order p; rejects composite p."""
    return PrimeField(p)


# ---------------------------------------------------------------------------
# monomials (bare exponent tuples) and monomial orders
# ---------------------------------------------------------------------------

def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Exponents, b: Exponents) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Exponents, b: Exponents) -> Exponents:
    """Exponent vector of x^a / x^b; requires divisibility."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise ValueError(f"{b} does not divide {a}")
    return out


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(a: Exponents) -> int:
    return sum(a)


def _grevlex_key(m: Exponents):
    # graded, then reverse-lex: later variables count against a monomial
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class Lex:
    """Pure lexicographic order, first variable strongest."""

    def key(self, m: Exponents):
        return m

    def __str__(self) -> str:
        return "lex"


@dataclass(frozen=True)
class GrevLex:
    """Graded reverse lexicographic order."""

    def key(self, m: Exponents):
        return _grevlex_key(m)

    def __str__(self) -> str:
        return "grevlex"


@dataclass(frozen=True)
class Block:
    """Elimination order: grevlex on the eliminated variables dominates,
    ties broken by the inner order on the remaining variables.

    Any monomial containing an eliminated variable beats every monomial in
    the remaining variables alone, which is exactly the elimination
    property needed to read off intersection ideals from a basis.
    """

    eliminated: frozenset[int]
    inner: "MonomialOrder" = field(default_factory=GrevLex)

    def __post_init__(self) -> None:
        elim = frozenset(self.eliminated)
        if not elim:
            raise ValueError("Block order needs a nonempty eliminated set")
        if any((not isinstance(i, int)) or i < 0 for i in elim):
            raise ValueError("eliminated indices must be nonnegative ints")
        object.__setattr__(self, "eliminated", elim)

    def key(self, m: Exponents):
        elim = self.eliminated
        block = []
        rest = []
        for i, e in enumerate(m):
            if i in elim:
                block.append(e)
            else:
                rest.append(e)
        return (_grevlex_key(tuple(block)), self.inner.key(tuple(rest)))

    def __str__(self) -> str:
        return f"block(eliminate={sorted(self.eliminated)}, inner={self.inner})"


MonomialOrder = Union[Lex, GrevLex, Block]


def compare_monomials(order: MonomialOrder, a: Exponents, b: Exponents) -> int:
    """-1, 0 or 1 as a <, =, > b under the order."""
    if len(a) != len(b):
        raise ValueError(f"arity mismatch: {len(a)} vs {len(b)}")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


# ---------------------------------------------------------------------------
# rings and polynomials
# ---------------------------------------------------------------------------

_NAME_RE = re.compile(r"[a-z][a-z0-9]*\Z")


@dataclass(frozen=True)
class PolyRing:
    """A polynomial ring: ordered variable names over a coefficient domain."""

    names: tuple[str, ...]
    domain: CoeffDomain = QQ

    def __post_init__(self) -> None:
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        for nm in names:
            if not _NAME_RE.match(nm):
                raise ValueError(f"bad variable name {nm!r}")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")

    @property
    def arity(self) -> int:
        return len(self.names)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: Union[int, Fraction]) -> "Polynomial":
        c = self.domain.normalize(c)
        if c == 0:
            return Polynomial(self, ())
        return Polynomial(self, (((0,) * self.arity, c),))

    def variable(self, which: Union[int, str]) -> "Polynomial":
        if isinstance(which, str):
            try:
                which = self.names.index(which)
            except ValueError:
                raise ValueError(f"unknown variable {which!r}") from None
        if not 0 <= which < self.arity:
            raise ValueError(f"variable index {which} out of range")
        exps = tuple(1 if i == which else 0 for i in range(self.arity))
        return Polynomial(self, ((exps, self.domain.one),))

    def variables(self) -> tuple["Polynomial", ...]:
        return tuple(self.variable(i) for i in range(self.arity))

    def monomial(self, exps: Sequence[int], coeff: Union[int, Fraction] = 1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.arity or any((not isinstance(e, int)) or e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps!r} for arity {self.arity}")
        c = self.domain.normalize(coeff)
        if c == 0:
            return Polynomial(self, ())
        return Polynomial(self, ((exps, c),))

    def from_dict(self, mapping: Mapping[Exponents, Union[int, Fraction]]) -> "Polynomial":
        return _from_dict(self, dict(mapping))

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def __str__(self) -> str:
        return f"{self.domain}[{', '.join(self.names)}]"


def _from_dict(ring: PolyRing, d: Mapping[Exponents, Scalar]) -> "Polynomial":
    dom = ring.domain
    items = []
    for m, c in d.items():
        c = dom.normalize(c)
        if c != 0:
            items.append((m, c))
    items.sort(key=lambda t: _grevlex_key(t[0]), reverse=True)
    return Polynomial(ring, tuple(items))


@dataclass(frozen=True)
class Polynomial:
    """Canonical sparse polynomial; terms grevlex-descending, no zero terms.

    Build through PolyRing helpers or arithmetic, not raw construction.
    """

    ring: PolyRing
    terms: tuple[tuple[Exponents, Scalar], ...]

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> dict[Exponents, Scalar]:
        return dict(self.terms)

    def total_degree(self) -> Union[int, None]:
        """Largest term degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(m) for m, _ in self.terms)

    def coefficient(self, exps: Sequence[int]) -> Scalar:
        target = tuple(exps)
        for m, c in self.terms:
            if m == target:
                return c
        return self.ring.domain.zero

    def lead_monomial(self, order: MonomialOrder) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no lead monomial")
        return max((m for m, _ in self.terms), key=order.key)

    def lead_coefficient(self, order: MonomialOrder) -> Scalar:
        lm = self.lead_monomial(order)
        return self.coefficient(lm)

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self.terms:
            return self
        inv = self.ring.domain.invert(self.lead_coefficient(order))
        return self.scale(inv)

    # -- arithmetic ----------------------------------------------------------

    def _check_ring(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_ring(other)
        d = dict(self.terms)
        for m, c in other.terms:
            d[m] = d.get(m, 0) + c
        return _from_dict(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.domain.characteristic
        if p:
            return Polynomial(self.ring, tuple((m, (-c) % p) for m, c in self.terms))
        return Polynomial(self.ring, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_ring(other)
        d: dict[Exponents, Scalar] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(x + y for x, y in zip(m1, m2))
                d[m] = d.get(m, 0) + c1 * c2
        return _from_dict(self.ring, d)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, c: Union[int, Fraction]) -> "Polynomial":
        c = self.ring.domain.normalize(c)
        if c == 0:
            return self.ring.zero
        d = {m: coeff * c for m, coeff in self.terms}
        return _from_dict(self.ring, d)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    # -- rendering ------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.names
        chunks: list[str] = []
        for i, (m, c) in enumerate(self.terms):
            neg = c < 0
            mag = -c if neg else c
            vars_part = "*".join(
                nm if e == 1 else f"{nm}^{e}"
                for nm, e in zip(names, m) if e > 0
            )
            if not vars_part:
                body = str(mag)
            elif mag == 1:
                body = vars_part
            else:
                body = f"{mag}*{vars_part}"
            if i == 0:
                chunks.append(f"-{body}" if neg else body)
            else:
                chunks.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"<{self} in {self.ring}>"


def homogeneous_degree(f: Polynomial) -> Union[int, None]:
    """Common total degree of all terms, or None (zero polynomial, or mixed)."""
    if not f.terms:
        return None
    degs = {sum(m) for m, _ in f.terms}
    if len(degs) == 1:
        return degs.pop()
    return None


def is_homogeneous(f: Polynomial) -> bool:
    """Zero counts as homogeneous (of every degree)."""
    if not f.terms:
        return True
    return homogeneous_degree(f) is not None


# ---------------------------------------------------------------------------
# multivariate division
# ---------------------------------------------------------------------------

def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder
           ) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: f = sum(q_i * d_i) + r.

    Ties go to the first divisor whose lead divides the current lead, so the
    output is deterministic.  No term of r is divisible by any divisor lead.
    """
    ring = f.ring
    dom = ring.domain
    if not divisors:
        raise ValueError("need at least one divisor")
    for d in divisors:
        if d.ring != ring:
            raise ValueError("divisor in a different ring")
        if d.is_zero():
            raise ValueError("zero divisor")
    keyf = order.key
    info = []
    for d in divisors:
        lm = d.lead_monomial(order)
        lc = d.coefficient(lm)
        tail = tuple(t for t in d.terms if t[0] != lm)
        info.append((lm, dom.invert(lc), tail))

    work = f.as_dict()
    quotients: list[dict[Exponents, Scalar]] = [{} for _ in divisors]
    remainder: dict[Exponents, Scalar] = {}
    p = dom.characteristic

    while work:
        m = max(work, key=keyf)
        c = work.pop(m)
        for idx, (lm, lcinv, tail) in enumerate(info):
            if all(a <= b for a, b in zip(lm, m)):
                q = tuple(b - a for a, b in zip(lm, m))
                factor = c * lcinv % p if p else c * lcinv
                qd = quotients[idx]
                qd[q] = qd.get(q, 0) + factor
                for tm, tc in tail:
                    nm = tuple(x + y for x, y in zip(tm, q))
                    nv = work.get(nm, 0) - factor * tc
                    nv = nv % p if p else nv
                    if nv:
                        work[nm] = nv
                    else:
                        work.pop(nm, None)
                break
        else:
            remainder[m] = c

    qs = [_from_dict(ring, qd) for qd in quotients]
    return qs, _from_dict(ring, remainder)


# ---------------------------------------------------------------------------
# parser for the input grammar
# ---------------------------------------------------------------------------
#
#   expr   := ('+'|'-')? term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := atom ('^' integer)?
#   atom   := integer | variable | '(' expr ')'
#
# Variables are [a-z][a-z0-9]*, integers are nonnegative literals, whitespace
# is insignificant.  '^' binds tighter than '*'.

class ParseError(ValueError):
    """Input text rejected; .position is the 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (column {position + 1})")
        self.position = position


_INT_RE = re.compile(r"\d+")
_VAR_RE = re.compile(r"[a-z][a-z0-9]*")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            m = _INT_RE.match(text, pos)
            tokens.append(("int", m.group(), pos))
            pos = m.end()
        elif ch.isalpha() and ch.islower():
            m = _VAR_RE.match(text, pos)
            tokens.append(("name", m.group(), pos))
            pos = m.end()
        elif ch in "+-*^()":
            tokens.append(("op", ch, pos))
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)
        self.take()

    def expr(self) -> Polynomial:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                nxt = self.term()
                result = result - nxt if val == "-" else result + nxt
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                result = result * self.factor()
            else:
                return result

    def factor(self) -> Polynomial:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            ekind, eval_, epos = self.peek()
            if ekind != "int":
                raise ParseError("exponent must be a nonnegative integer", epos)
            self.take()
            return base ** int(eval_)
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "int":
            return self.ring.constant(int(val))
        if kind == "name":
            if val not in self.ring.names:
                raise ParseError(f"unknown variable {val!r}", pos)
            return self.ring.variable(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError("expected a variable, integer or '('", pos)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse grammar text into a canonical polynomial of the ring."""
    parser = _Parser(text, ring)
    result = parser.expr()
    kind, _, pos = parser.peek()
    if kind != "end":
        raise ParseError("trailing input", pos)
    return result


def parse_polynomial_list(text: str, ring: PolyRing) -> list[Polynomial]:
    """Parse a comma-separated list of polynomials."""
    pieces = text.split(",")
    out = []
    offset = 0
    for piece in pieces:
        if not piece.strip():
            raise ParseError("empty polynomial in list", offset)
        try:
            out.append(parse_polynomial(piece, ring))
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" (column", 1)[0],
                             offset + exc.position) from None
        offset += len(piece) + 1
    return out

"""Sparse multivariate polynomials over the rationals.

Polynomials are stored as a map from exponent tuples to nonzero Fraction
coefficients, relative to a fixed ordered variable set.  All arithmetic is
exact; there is no floating point anywhere in this package.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class ParseError(ValueError):
    """Syntax or name error while parsing a polynomial expression.

    Carries the 0-based offset of the offending token in ``position``.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class VarSet:
    """An ordered set of variable names.

    Two polynomials interoperate only when their variable sets are equal
    (same names, same order); mixing them raises ValueError rather than
    guessing an embedding.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names: {names}")
        for nm in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", nm):
                raise ValueError(f"invalid variable name: {nm!r}")
        self.names = names
        self._index = {nm: k for k, nm in enumerate(names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}; varset is {self.names}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VarSet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VarSet{self.names}"


class WeightFunction:
    """Non-negative integer weights, one per variable of a varset."""

    __slots__ = ("varset", "weights")

    def __init__(self, varset: VarSet, weights: Sequence[int]):
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(varset):
            raise ValueError(f"expected {len(varset)} weights, got {len(weights)}")
        if any(w < 0 for w in weights):
            raise ValueError(f"weights must be non-negative: {weights}")
        self.varset = varset
        self.weights = weights

    def of_exponents(self, exps: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def __repr__(self) -> str:
        return f"WeightFunction({self.varset!r}, {self.weights})"


def _as_fraction(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected int or Fraction, got {type(c).__name__}")


class MultiPoly:
    """A sparse polynomial with exact rational coefficients.

    Terms live in ``self.terms``: exponent tuple -> nonzero Fraction.  The
    zero polynomial has an empty term map.  Instances are treated as
    immutable; all operations return fresh polynomials.
    """

    __slots__ = ("varset", "terms")

    def __init__(self, varset: VarSet, terms: Mapping[tuple[int, ...], Scalar] | None = None):
        self.varset = varset
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            nvars = len(varset)
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent tuple {exps} for {varset!r}")
                c = _as_fraction(c)
                if c != 0:
                    clean[exps] = c
        self.terms = clean

    # ---------------------------------------------------------------- basics

    @classmethod
    def zero(cls, varset: VarSet) -> MultiPoly:
        return cls(varset)

    @classmethod
    def constant(cls, varset: VarSet, c: Scalar) -> MultiPoly:
        return cls(varset, {(0,) * len(varset): c})

    @classmethod
    def variable(cls, varset: VarSet, name: str) -> MultiPoly:
        exps = [0] * len(varset)
        exps[varset.index(name)] = 1
        return cls(varset, {tuple(exps): 1})

    @classmethod
    def monomial(cls, varset: VarSet, exps: Sequence[int], c: Scalar = 1) -> MultiPoly:
        return cls(varset, {tuple(exps): c})

    def is_zero(self) -> bool:
        return not self.terms

    def constant_value(self) -> Fraction:
        """The coefficient of the constant term (0 if absent)."""
        return self.terms.get((0,) * len(self.varset), Fraction(0))

    def total_degree(self) -> int:
        """Max total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        """Max exponent of one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        k = self.varset.index(name)
        return max(e[k] for e in self.terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def _check_same_varset(self, other: MultiPoly) -> None:
        if self.varset != other.varset:
            raise ValueError(f"varset mismatch: {self.varset!r} vs {other.varset!r}")

    # ------------------------------------------------------------ arithmetic

    def _coerce(self, other: object) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            self._check_same_varset(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.varset, other)
        return None

    def __add__(self, other: object) -> MultiPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        acc = dict(self.terms)
        for exps, c in q.terms.items():
            s = acc.get(exps, 0) + c
            if s:
                acc[exps] = s
            else:
                acc.pop(exps, None)
        out = MultiPoly.zero(self.varset)
        out.terms = acc
        return out

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        out = MultiPoly.zero(self.varset)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: object) -> MultiPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: object) -> MultiPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other: object) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            out = MultiPoly.zero(self.varset)
            if c:
                out.terms = {e: k * c for e, k in self.terms.items()}
            return out
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        acc: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in q.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = acc.get(key, 0) + c1 * c2
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
        out = MultiPoly.zero(self.varset)
        out.terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {k!r}")
        result = MultiPoly.constant(self.varset, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.varset, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.varset == other.varset and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.varset, frozenset(self.terms.items())))

    # ---------------------------------------------------------- calculus etc.

    def derivative(self, name: str) -> MultiPoly:
        """Formal partial derivative with respect to one variable."""
        k = self.varset.index(name)
        acc: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            if exps[k] == 0:
                continue
            nxt = list(exps)
            nxt[k] -= 1
            acc[tuple(nxt)] = c * exps[k]
        out = MultiPoly.zero(self.varset)
        out.terms = acc
        return out

    def substitute(self, images: Mapping[str, MultiPoly]) -> MultiPoly:
        """Evaluate at polynomial images of the variables.

        Every variable actually occurring in self must have an image, and all
        images must share one varset (which may differ from self's).  Powers
        of each image are cached across terms.
        """
        used = [k for k in range(len(self.varset)) if any(e[k] for e in self.terms)]
        if not self.terms:
            if images:
                target = next(iter(images.values())).varset
                return MultiPoly.zero(target)
            return MultiPoly.zero(self.varset)
        target: VarSet | None = None
        for img in images.values():
            if target is None:
                target = img.varset
            elif img.varset != target:
                raise ValueError("substitution images use mixed varsets")
        if target is None:
            target = self.varset
        per_var: dict[int, MultiPoly] = {}
        for k in used:
            nm = self.varset.names[k]
            if nm not in images:
                raise ValueError(f"no substitution image for variable {nm!r}")
            per_var[k] = images[nm]
        pow_cache: dict[tuple[int, int], MultiPoly] = {}

        def power(k: int, n: int) -> MultiPoly:
            key = (k, n)
            got = pow_cache.get(key)
            if got is None:
                got = per_var[k] ** n
                pow_cache[key] = got
            return got

        total = MultiPoly.zero(target)
        for exps, c in self.terms.items():
            term = MultiPoly.constant(target, c)
            for k in used:
                if exps[k]:
                    term = term * power(k, exps[k])
            total = total + term
        return total

    def rename(self, target: VarSet) -> MultiPoly:
        """Transport to a varset that contains all variables used here."""
        mapping = [target.index(nm) for nm in self.varset.names]
        acc: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            out = [0] * len(target)
            for k, e in enumerate(exps):
                out[mapping[k]] = e
            acc[tuple(out)] = c
        p = MultiPoly.zero(target)
        p.terms = acc
        return p

    def weight_degree(self, w: WeightFunction) -> int | None:
        """Max weight of a term under w; None for the zero polynomial."""
        if w.varset != self.varset:
            raise ValueError("weight function varset mismatch")
        if not self.terms:
            return None
        return max(w.of_exponents(e) for e in self.terms)

    def top_component(self, w: WeightFunction) -> MultiPoly:
        """The sum of terms of maximal w-weight (0 for the zero polynomial)."""
        d = self.weight_degree(w)
        out = MultiPoly.zero(self.varset)
        if d is None:
            return out
        out.terms = {e: c for e, c in self.terms.items() if w.of_exponents(e) == d}
        return out

    def divide_exact(self, divisor: MultiPoly) -> MultiPoly:
        """Exact division by a single-term divisor; raises if any term fails.

        Exactness failures are real errors in this package (they witness a
        wrong valuation in a construction), hence the loud ValueError.
        """
        self._check_same_varset(divisor)
        if len(divisor.terms) != 1:
            raise ValueError("divide_exact expects a one-term divisor")
        ((dexps, dc),) = divisor.terms.items()
        acc: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            out = tuple(a - b for a, b in zip(exps, dexps))
            if any(e < 0 for e in out):
                raise ValueError(
                    f"non-exact division: term {_format_term(self.varset, exps, c)} "
                    f"not divisible by {divisor}"
                )
            acc[out] = c / dc
        p = MultiPoly.zero(self.varset)
        p.terms = acc
        return p

    # -------------------------------------------------------------- printing

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in graded-lex descending order (canonical print order)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exps, c in self.sorted_terms():
            body = _format_term(self.varset, exps, c)
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append("- " + body[1:])
            else:
                parts.append("+ " + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _format_term(varset: VarSet, exps: tuple[int, ...], c: Fraction) -> str:
    factors = []
    for nm, e in zip(varset.names, exps):
        if e == 1:
            factors.append(nm)
        elif e > 1:
            factors.append(f"{nm}^{e}")
    if not factors:
        return str(c)
    if c == 1:
        return "*".join(factors)
    if c == -1:
        return "-" + "*".join(factors)
    return str(c) + "*" + "*".join(factors)


# ------------------------------------------------------------------- parsing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", at)
        if m.group("int") is not None:
            tokens.append(("int", m.group("int"), m.start("int")))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    return tokens


class _Parser:
    """Recursive-descent parser for the expression grammar.

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' int)?
    atom   := int ('/' int)? | name | '(' expr ')'

    '/' only forms rational literals p/q; it is not general division.
    """

    def __init__(self, tokens: list[tuple[str, str, int]], varset: VarSet, length: int):
        self.tokens = tokens
        self.varset = varset
        self.pos = 0
        self.length = length

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.length)
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}, found {tok[1]!r}", tok[2])

    def parse(self) -> MultiPoly:
        p = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return p

    def expr(self) -> MultiPoly:
        p = self.term()
        while True:
            tok = self.peek()
            if tok is not None and tok[0] == "op" and tok[1] in "+-":
                self.take()
                q = self.term()
                p = p + q if tok[1] == "+" else p - q
            else:
                return p

    def term(self) -> MultiPoly:
        p = self.factor()
        while True:
            tok = self.peek()
            if tok is not None and tok[0] == "op" and tok[1] == "*":
                self.take()
                p = p * self.factor()
            else:
                return p

    def factor(self) -> MultiPoly:
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "-":
            self.take()
            return -self.factor()
        p = self.atom()
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "^":
            self.take()
            etok = self.take()
            if etok[0] != "int":
                raise ParseError(f"expected integer exponent, found {etok[1]!r}", etok[2])
            p = p ** int(etok[1])
        return p

    def atom(self) -> MultiPoly:
        tok = self.take()
        kind, text, at = tok
        if kind == "int":
            value = Fraction(int(text))
            nxt = self.peek()
            if nxt is not None and nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "int":
                    raise ParseError(f"expected integer denominator, found {den[1]!r}", den[2])
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", den[2])
                value = Fraction(int(text), int(den[1]))
            return MultiPoly.constant(self.varset, value)
        if kind == "name":
            if text not in self.varset:
                raise ParseError(f"unknown variable {text!r}", at)
            return MultiPoly.variable(self.varset, text)
        if kind == "op" and text == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError(f"unexpected token {text!r}", at)


def parse_poly(text: str, varset: VarSet) -> MultiPoly:
    """Parse an expression with +, -, *, ^, parentheses and p/q literals.

    Multiplication must be explicit ("2*X", not "2X").  Unknown variable
    names and syntax errors raise ParseError with a position.
    """
    return _Parser(_tokenize(text), varset, len(text)).parse()

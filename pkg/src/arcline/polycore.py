"""Exact sparse multivariate polynomials over the integers.

Variables are doubly indexed: ``x(j, i)`` is coordinate ``j`` carrying weight
``i``. Weight-0 variables are the ambient coordinates; positive weights appear
when a coordinate is replaced by a jet of coordinates, and the *weight* of a
monomial (the sum of ``i * exponent`` over its variables) grades the result of
that substitution. Plain polynomial rings just use weight 0 throughout.

A monomial is stored as a tuple of ``((j, i), exponent)`` pairs, sorted by
``(j, i)``, exponents positive; the empty tuple is the monomial 1. A
polynomial is a map from monomials to nonzero integer coefficients, so all
arithmetic is exact at arbitrary precision. The zero polynomial is the empty
map.

The text grammar, used by :func:`parse_poly` and produced by ``str()``::

    expr   ::= ["-"] term (("+"|"-") term)*
    term   ::= factor ("*" factor)*
    factor ::= atom ("^" uint)?
    atom   ::= uint | var | "(" expr ")" | "-" factor
    var    ::= "x" index ("_" weight)?

so ``x2`` is coordinate 2 at weight 0 and ``x2_1`` the same coordinate at
weight 1. Printing is deterministic (terms in lexicographic monomial order)
and round-trips through the parser.
"""

from __future__ import annotations

from .errors import DomainError, ParseError

Var = tuple[int, int]
Monomial = tuple[tuple[Var, int], ...]

ONE_MONO: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Merge two sorted monomials, adding exponents of shared variables."""
    if not a:
        return b
    if not b:
        return a
    out: list[tuple[Var, int]] = []
    ia = ib = 0
    while ia < len(a) and ib < len(b):
        va, ea = a[ia]
        vb, eb = b[ib]
        if va == vb:
            out.append((va, ea + eb))
            ia += 1
            ib += 1
        elif va < vb:
            out.append(a[ia])
            ia += 1
        else:
            out.append(b[ib])
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_weight(m: Monomial) -> int:
    return sum(v[1] * e for v, e in m)


class SparsePoly:
    """An immutable-by-convention sparse polynomial with int coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = c

    # Constructors

    @classmethod
    def zero(cls) -> SparsePoly:
        return cls()

    @classmethod
    def const(cls, c: int) -> SparsePoly:
        return cls({ONE_MONO: c})

    @classmethod
    def variable(cls, index: int, weight: int = 0) -> SparsePoly:
        if index < 0 or weight < 0:
            raise DomainError("variable index and weight must be non-negative",
                              index=index, weight=weight)
        return cls({(((index, weight), 1),): 1})

    # Ring structure

    def __add__(self, other: SparsePoly | int) -> SparsePoly:
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SparsePoly(out)

    __radd__ = __add__

    def __neg__(self) -> SparsePoly:
        return SparsePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: SparsePoly | int) -> SparsePoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> SparsePoly:
        return _coerce(other) + (-self)

    def __mul__(self, other: SparsePoly | int) -> SparsePoly:
        other = _coerce(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return SparsePoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> SparsePoly:
        if e < 0:
            raise DomainError("exponent must be a non-negative integer", exponent=e)
        result = SparsePoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = SparsePoly.const(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # Inspection

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set[Var]:
        return {v for m in self.terms for v, _ in m}

    def max_index(self) -> int:
        """Largest coordinate index used; -1 for a constant."""
        return max((v[0] for v in self.variables()), default=-1)

    def is_weight_zero(self) -> bool:
        return all(v[1] == 0 for v in self.variables())

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    def homogeneous_degree(self) -> int | None:
        """The common total degree of all terms, or None if mixed.

        The zero polynomial reports degree 0.
        """
        degs = {mono_degree(m) for m in self.terms}
        if not degs:
            return 0
        if len(degs) == 1:
            return degs.pop()
        return None

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(m, 0)

    def evaluate(self, assignment: dict[Var, int]) -> int:
        """Exact integer evaluation; every variable present must be assigned."""
        total = 0
        for m, c in self.terms.items():
            v = c
            for var, e in m:
                v *= assignment[var] ** e
            total += v
        return total

    def reduce_coefficients_mod(self, modulus: int) -> SparsePoly:
        if modulus <= 1:
            raise DomainError("modulus must exceed 1", modulus=modulus)
        return SparsePoly({m: c % modulus for m, c in self.terms.items()})

    # Printing

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for m in sorted(self.terms):
            c = self.terms[m]
            body = "*".join(_var_str(v) + (f"^{e}" if e > 1 else "")
                            for v, e in m)
            if not body:
                body = str(abs(c))
            elif abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"SparsePoly({self})"


def _coerce(x: SparsePoly | int) -> SparsePoly:
    if isinstance(x, SparsePoly):
        return x
    if isinstance(x, int):
        return SparsePoly.const(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")


def _var_str(v: Var) -> str:
    j, i = v
    return f"x{j}" if i == 0 else f"x{j}_{i}"


def poly_mul(a: SparsePoly, b: SparsePoly) -> SparsePoly:
    """Exact product; alias for ``a * b`` kept as a named entry point."""
    return _coerce(a) * _coerce(b)


def weight_components(p: SparsePoly) -> dict[int, SparsePoly]:
    """Split p by monomial weight.

    Returns a map weight -> nonzero component; the zero polynomial gives {}.
    The components sum back to p, and each is weight-homogeneous.
    """
    buckets: dict[int, dict[Monomial, int]] = {}
    for m, c in p.terms.items():
        buckets.setdefault(mono_weight(m), {})[m] = c
    return {w: SparsePoly(t) for w, t in sorted(buckets.items())}


# Parser

_OPS = set("+-*^()")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    toks: list[tuple[str, object, int]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            toks.append(("op", ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            toks.append(("int", int(text[start:i]), start))
            continue
        if ch == "x":
            start = i
            i += 1
            d0 = i
            while i < len(text) and text[i].isdigit():
                i += 1
            if i == d0:
                raise ParseError("variable needs a coordinate index", start, text)
            index = int(text[d0:i])
            weight = 0
            if i < len(text) and text[i] == "_":
                i += 1
                d1 = i
                while i < len(text) and text[i].isdigit():
                    i += 1
                if i == d1:
                    raise ParseError("'_' must be followed by a weight", i, text)
                weight = int(text[d1:i])
            toks.append(("var", (index, weight), start))
            continue
        raise ParseError(f"unexpected character {ch!r}", i, text)
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, n: int | None):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0
        self.n = n

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect_op(self, ch: str):
        kind, val, pos = self.take()
        if kind != "op" or val != ch:
            raise ParseError(f"expected {ch!r}", pos, self.text)

    def expr(self) -> SparsePoly:
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val == "-":
            self.take()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term(self) -> SparsePoly:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> SparsePoly:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            ekind, eval_, epos = self.take()
            if ekind != "int":
                raise ParseError("exponent must be a non-negative integer",
                                 epos, self.text)
            return base ** eval_
        return base

    def atom(self) -> SparsePoly:
        kind, val, pos = self.take()
        if kind == "int":
            return SparsePoly.const(val)
        if kind == "var":
            index, weight = val
            if self.n is not None and index > self.n:
                raise ParseError(
                    f"variable index {index} exceeds ambient dimension {self.n}",
                    pos, self.text)
            return SparsePoly.variable(index, weight)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "op" and val == "-":
            return -self.factor()
        raise ParseError("expected a number, variable, or '('", pos, self.text)


def parse_poly(text: str, n: int | None = None) -> SparsePoly:
    """Parse the grammar above into a polynomial.

    When given, ``n`` bounds the allowed coordinate index (coordinates of
    projective n-space are x0..xn). Raises ParseError with a position on any
    syntax or symbol problem.
    """
    p = _Parser(text, n)
    result = p.expr()
    kind, _, pos = p.peek()
    if kind != "end":
        raise ParseError("trailing input after expression", pos, text)
    return result

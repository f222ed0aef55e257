"""Sparse exact polynomials over Q, linear-form division, and rational functions.

Variables are t1..tn, the coordinate functions on H^2(BT) = Z^n.  A weight
w is identified with the linear form w1*t1 + ... + wn*tn.
"""

from __future__ import annotations

import ast
import numbers
import operator
import re
from collections import Counter
from fractions import Fraction
from functools import reduce
from itertools import combinations, combinations_with_replacement

from .lattice import Weight


def _coerce_scalar(x):
    if isinstance(x, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(x, (numbers.Integral, Fraction)):
        return Fraction(x)
    return None


class Polynomial:
    """Immutable sparse polynomial: {exponent tuple: nonzero Fraction}."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean
        self._hash = None

    # constructors
    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in canonical order (lexicographically descending exponents)."""
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exps) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def degree(self) -> int:
        """Polynomial degree (sum of exponents); -1 for zero."""
        return max((sum(e) for e in self._terms), default=-1)

    def topological_degree(self) -> int:
        return 2 * self.degree()

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial(self.nvars, {e: c for e, c in self._terms.items() if sum(e) == d})

    # arithmetic
    def _lift(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count {self.nvars} vs {other.nvars}")
            return other
        c = _coerce_scalar(other)
        if c is None:
            return None
        return Polynomial.constant(self.nvars, c)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _coerce_scalar(other)
        if c is None and isinstance(other, Polynomial) and other.is_constant():
            c = other.constant_value()
        if c is None:
            return NotImplemented
        if c == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return Polynomial(self.nvars, {e: v / c for e, v in self._terms.items()})

    def __pow__(self, k):
        if not isinstance(k, numbers.Integral) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Polynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        c = _coerce_scalar(other) if not isinstance(other, bool) else None
        if c is not None:
            return self == Polynomial.constant(self.nvars, c)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # substitution
    def substitute(self, images) -> "Polynomial":
        """Replace t_i by images[i] (Polynomials sharing a variable count)."""
        images = list(images)
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        m = images[0].nvars if images else 0
        out = Polynomial.zero(m)
        powers = [dict() for _ in images]
        for e, c in self._terms.items():
            term = Polynomial.constant(m, c)
            for i, k in enumerate(e):
                if k:
                    if k not in powers[i]:
                        powers[i][k] = images[i] ** k
                    term = term * powers[i][k]
            out = out + term
        return out

    def act(self, psi) -> "Polynomial":
        """Pull back along the lattice map psi: linear_form(w) -> linear_form(psi w)."""
        n = self.nvars
        images = [Polynomial(n, {tuple(int(j == r) for j in range(n)): psi[r][i] for r in range(n)})
                  for i in range(n)]
        return self.substitute(images)

    def evaluate_at(self, point):
        """Exact value at a rational point."""
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                v *= Fraction(x) ** k
            total += v
        return total

    # printing / parsing
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(f"t{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({self.nvars}, '{self}')"

    def to_json(self):
        return str(self)


def variables(nvars: int):
    return [Polynomial.variable(nvars, i) for i in range(nvars)]


def linear_form(w) -> Polynomial:
    w = w if isinstance(w, Weight) else Weight(w)
    n = len(w)
    return Polynomial(n, {tuple(int(j == i) for j in range(n)): x for i, x in enumerate(w) if x})


def _pivot(w):
    w = w if isinstance(w, Weight) else Weight(w)
    if w.is_zero():
        raise ValueError("division by the zero weight")
    return w, next(i for i, x in enumerate(w) if x)


def restrict_to_hyperplane(f: Polynomial, w) -> Polynomial:
    """Reduce f modulo linear_form(w): eliminate t_j (first j with w_j != 0).

    The result is independent of t_j and vanishes iff linear_form(w) divides f.
    """
    w, j = _pivot(w)
    n = f.nvars
    images = variables(n)
    sol = Polynomial.zero(n)
    for i, x in enumerate(w):
        if i != j and x:
            sol = sol - Fraction(x, w[j]) * images[i]
    images[j] = sol
    return f.substitute(images)


def divide_by_linear(f: Polynomial, w) -> Polynomial | None:
    """Exact quotient f / linear_form(w), or None when it does not divide."""
    w, j = _pivot(w)
    if len(w) != f.nvars:
        raise ValueError("rank mismatch")
    ell = linear_form(w)
    rem = dict(f.terms)
    quot = {}
    while True:
        cands = [e for e in rem if e[j] > 0]
        if not cands:
            break
        e = max(cands, key=lambda x: (x[j], x))
        c = rem[e] / w[j]
        qe = tuple(k - (i == j) for i, k in enumerate(e))
        quot[qe] = quot.get(qe, 0) + c
        for le, lc in ell.terms.items():
            te = tuple(a + b for a, b in zip(qe, le))
            rem[te] = rem.get(te, 0) - c * lc
            if not rem[te]:
                del rem[te]
    if rem:
        return None
    return Polynomial(f.nvars, quot)


def elementary_symmetric(ws, i: int, nvars: int | None = None) -> Polynomial:
    ws = [w if isinstance(w, Weight) else Weight(w) for w in ws]
    if nvars is None:
        if not ws:
            raise ValueError("nvars required for an empty weight list")
        nvars = len(ws[0])
    if not 0 <= i <= len(ws):
        raise ValueError(f"index {i} out of range 0..{len(ws)}")
    forms = [linear_form(w) for w in ws]
    out = Polynomial.zero(nvars)
    for sub in combinations(forms, i):
        out = out + reduce(operator.mul, sub, Polynomial.one(nvars))
    return out


def monomials(nvars: int, degree: int):
    """All exponent vectors of the given total degree, in canonical order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


# --- expression evaluation ---

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
}


def evaluate(expr: str, env: dict):
    """Evaluate an arithmetic expression over the values in env.

    Supports + - * /, and powers written either ^ or **.  Integer literals
    divide exactly (1/2 is a Fraction).  Names resolve through env only.
    """
    try:
        # ^ is exponentiation here; Python's ^ binds too loosely, so rewrite it
        tree = ast.parse(expr.strip().replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse expression {expr!r}: {exc.msg}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise ValueError(f"only integer literals allowed, got {node.value!r}")
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise ValueError(f"unknown name {node.id!r}")
            return env[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            left, right = ev(node.left), ev(node.right)
            if type(node.op) in _BINOPS:
                return _BINOPS[type(node.op)](left, right)
            if isinstance(node.op, ast.Div):
                return left / right
            if isinstance(node.op, ast.Pow):
                if not (isinstance(right, Fraction) and right.denominator == 1 and right >= 0):
                    raise ValueError("exponents must be nonnegative integer literals")
                return left ** int(right)
        raise ValueError(f"unsupported syntax in {expr!r}: {ast.dump(node)[:60]}")

    return ev(tree)


_VAR = re.compile(r"t(\d+)")


def parse_polynomial(text: str, nvars: int, env: dict | None = None) -> Polynomial:
    """Parse the canonical string grammar ("2*t1^2 - t1*t2") back to a Polynomial."""
    names = {f"t{i + 1}": v for i, v in enumerate(variables(nvars))}
    for m in _VAR.finditer(text):
        if int(m.group(1)) > nvars or int(m.group(1)) == 0:
            raise ValueError(f"variable t{m.group(1)} out of range for {nvars} variables")
    if env:
        names.update(env)
    val = evaluate(text, names)
    if isinstance(val, Fraction):
        val = Polynomial.constant(nvars, val)
    if not isinstance(val, Polynomial):
        raise ValueError(f"{text!r} does not evaluate to a polynomial")
    return val


# --- rational functions ---

def _normalize_factor(w):
    """Split w as c * u with u primitive and its first nonzero entry positive."""
    w = w if isinstance(w, Weight) else Weight(w)
    from math import gcd
    g = reduce(gcd, (abs(x) for x in w), 0)
    if g == 0:
        raise ZeroDivisionError("zero linear factor in denominator")
    lead = next(x for x in w if x)
    c = g if lead > 0 else -g
    return Weight(x // c for x in w), c


class RationalFunction:
    """num / den with den given as a product of linear forms (or a general polynomial).

    When the denominator is a product of linear forms it is kept factored,
    which lets common linear factors cancel exactly.
    """

    __slots__ = ("num", "_factors", "_den")

    def __init__(self, num: Polynomial, den=None, factors=None):
        if factors is not None:
            c = Fraction(1)
            counts = Counter()
            for w in factors:
                u, k = _normalize_factor(w)
                counts[u] += 1
                c *= k
            num = num / c
            self._factors = counts
            self._den = None
        else:
            if den is None:
                den = Polynomial.one(num.nvars)
            if den.is_zero():
                raise ZeroDivisionError("zero denominator")
            if den.is_constant():
                num = num / den.constant_value()
                self._factors = Counter()
                self._den = None
            else:
                self._factors = None
                self._den = den
        self.num = num
        self._cancel()

    @classmethod
    def over_weights(cls, num, weights):
        return cls(num, factors=list(weights))

    def _cancel(self):
        if self._factors is None:
            return
        for u in list(self._factors):
            while self._factors[u]:
                q = divide_by_linear(self.num, u)
                if q is None:
                    break
                self.num = q
                self._factors[u] -= 1
            if not self._factors[u]:
                del self._factors[u]

    @property
    def nvars(self):
        return self.num.nvars

    @property
    def den(self) -> Polynomial:
        if self._factors is None:
            return self._den
        out = Polynomial.one(self.nvars)
        for u, k in sorted(self._factors.items()):
            out = out * linear_form(u) ** k
        return out

    @property
    def factored(self) -> bool:
        return self._factors is not None

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other, factors=[])
        c = _coerce_scalar(other)
        if c is None:
            return None
        return RationalFunction(Polynomial.constant(self.nvars, c), factors=[])

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.factored and other.factored:
            union = self._factors | other._factors
            n1 = self.num * _product(union - self._factors, self.nvars)
            n2 = other.num * _product(union - other._factors, self.nvars)
            return RationalFunction(n1 + n2, factors=list(union.elements()))
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RationalFunction)
        out.num = -self.num
        out._factors = None if self._factors is None else Counter(self._factors)
        out._den = self._den
        return out

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.factored and other.factored:
            return RationalFunction(self.num * other.num,
                                    factors=list((self._factors + other._factors).elements()))
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalFunction is unhashable; equality is by cross-multiplication")

    def as_polynomial(self) -> Polynomial | None:
        if self.factored:
            return self.num if not self._factors else None
        q = _exact_quotient(self.num, self._den)
        return q

    def __repr__(self):
        return f"RationalFunction(({self.num}) / ({self.den}))"


def _product(counter, nvars):
    out = Polynomial.one(nvars)
    for u, k in counter.items():
        out = out * linear_form(u) ** k
    return out


def _exact_quotient(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """f / g by multivariate long division in lex order; None unless exact."""
    if g.is_zero():
        raise ZeroDivisionError
    lead_e, lead_c = g.items()[0]
    rem = f
    quot = Polynomial.zero(f.nvars)
    while not rem.is_zero():
        e, c = rem.items()[0]
        if any(a < b for a, b in zip(e, lead_e)):
            return None
        qe = tuple(a - b for a, b in zip(e, lead_e))
        t = Polynomial(f.nvars, {qe: c / lead_c})
        quot = quot + t
        rem = rem - t * g
    return quot

"""Exact octonion arithmetic over Q (and Q(i) for the C + C^3 picture).

Two multiplication rules on the same basis e0..e7:

* variant "I": pairs of quaternions (x0 + x1 i + x2 j + x3 k, x4 + x5 i + x6 j + x7 k)
  with (p1, q1)(p2, q2) = (p1 p2 - conj(q2) q1, q2 p1 + q1 conj(p2));
* variant "II": C + C^3 with a = x0 + x1 i, m = (x2 + x3 i, x4 + x5 i, x6 + x7 i) and
  (a + m)(b + n) = (ab - <m, n>) + (a n + conj(b) m - conj(m x n)).

The first component of the variant I rule is sometimes printed as
p1 q1 - conj(q2) q1; with that reading e0 is not a left identity
(see ``printed_pair_product``), so the Cayley-Dickson form above is used.
"""

from __future__ import annotations

import random
from fractions import Fraction


def _fr(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class QI:
    """Gaussian rational re + im*i."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _fr(re)
        self.im = _fr(im)

    def __add__(self, o):
        o = _qi(o)
        return QI(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = _qi(o)
        return QI(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return _qi(o) - self

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __mul__(self, o):
        o = _qi(o)
        return QI(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self):
        return QI(self.re, -self.im)

    def norm2(self):
        return self.re * self.re + self.im * self.im

    def __eq__(self, o):
        o = _qi(o)
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"QI({self.re}, {self.im})"


def _qi(x):
    return x if isinstance(x, QI) else QI(x, 0)


class Quaternion:
    __slots__ = ("c",)

    def __init__(self, *coords):
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction)):
            coords = tuple(coords[0])
        if len(coords) != 4:
            raise ValueError("a quaternion has 4 coordinates")
        self.c = tuple(_fr(x) for x in coords)

    def __add__(self, o):
        return Quaternion(a + b for a, b in zip(self.c, o.c))

    def __sub__(self, o):
        return Quaternion(a - b for a, b in zip(self.c, o.c))

    def __neg__(self):
        return Quaternion(-a for a in self.c)

    def __mul__(self, o):
        if not isinstance(o, Quaternion):
            return Quaternion(a * _fr(o) for a in self.c)
        a1, b1, c1, d1 = self.c
        a2, b2, c2, d2 = o.c
        return Quaternion(a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                          a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                          a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    def __rmul__(self, k):
        return Quaternion(a * _fr(k) for a in self.c)

    def conj(self):
        a, b, c, d = self.c
        return Quaternion(a, -b, -c, -d)

    def norm2(self):
        return sum(x * x for x in self.c)

    def inverse(self):
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("zero quaternion")
        return Quaternion(x / n for x in self.conj().c)

    def __eq__(self, o):
        return isinstance(o, Quaternion) and self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Quaternion{tuple(str(x) for x in self.c)}"


class Octonion:
    """x0 e0 + ... + x7 e7 with exact rational coordinates; * is variant I."""

    __slots__ = ("c",)

    def __init__(self, coords):
        coords = tuple(_fr(x) for x in coords)
        if len(coords) != 8:
            raise ValueError("an octonion has 8 coordinates")
        self.c = coords

    @classmethod
    def basis(cls, k):
        return cls([int(i == k) for i in range(8)])

    @classmethod
    def zero(cls):
        return cls([0] * 8)

    def __add__(self, o):
        return Octonion(a + b for a, b in zip(self.c, o.c))

    def __sub__(self, o):
        return Octonion(a - b for a, b in zip(self.c, o.c))

    def __neg__(self):
        return Octonion(-a for a in self.c)

    def scale(self, k):
        k = _fr(k)
        return Octonion(a * k for a in self.c)

    def __mul__(self, o):
        if isinstance(o, Octonion):
            return mul(self, o, "I")
        return self.scale(o)

    def __rmul__(self, k):
        return self.scale(k)

    def conj(self):
        return Octonion([self.c[0]] + [-x for x in self.c[1:]])

    def real(self):
        return self.c[0]

    def imag(self):
        return Octonion([0] + list(self.c[1:]))

    def norm2(self):
        return sum(x * x for x in self.c)

    def __eq__(self, o):
        return isinstance(o, Octonion) and self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def signed_basis(self):
        """(sign, k) if this is +-e_k, else None."""
        nz = [(i, x) for i, x in enumerate(self.c) if x]
        if len(nz) == 1 and abs(nz[0][1]) == 1:
            return (int(nz[0][1]), nz[0][0])
        return None

    def __repr__(self):
        sb = self.signed_basis()
        if sb:
            return ("-" if sb[0] < 0 else "") + f"e{sb[1]}"
        return "Octonion(" + ", ".join(str(x) for x in self.c) + ")"


def inner(u: Octonion, v: Octonion) -> Fraction:
    return sum(a * b for a, b in zip(u.c, v.c))


# --- coordinate pictures ---

def to_pair(x: Octonion):
    return Quaternion(x.c[:4]), Quaternion(x.c[4:])


def from_pair(p: Quaternion, q: Quaternion) -> Octonion:
    return Octonion(p.c + q.c)


def to_complex(x: Octonion):
    c = x.c
    return QI(c[0], c[1]), [QI(c[2], c[3]), QI(c[4], c[5]), QI(c[6], c[7])]


def from_complex(a: QI, m) -> Octonion:
    out = [a.re, a.im]
    for z in m:
        out += [z.re, z.im]
    return Octonion(out)


# --- multiplications ---

def _mul_pairs(x, y):
    p1, q1 = to_pair(x)
    p2, q2 = to_pair(y)
    return from_pair(p1 * p2 - q2.conj() * q1, q2 * p1 + q1 * p2.conj())


def printed_pair_product(x, y):
    """The pair rule with first component p1 q1 - conj(q2) q1, as sometimes printed."""
    p1, q1 = to_pair(x)
    p2, q2 = to_pair(y)
    return from_pair(p1 * q1 - q2.conj() * q1, q2 * p1 + q1 * p2.conj())


def _cross(m, n):
    return [m[1] * n[2] - m[2] * n[1], m[2] * n[0] - m[0] * n[2], m[0] * n[1] - m[1] * n[0]]


def _mul_complex(x, y):
    a, m = to_complex(x)
    b, n = to_complex(y)
    herm = m[0] * n[0].conj() + m[1] * n[1].conj() + m[2] * n[2].conj()
    cr = _cross(m, n)
    vec = [a * n[i] + b.conj() * m[i] - cr[i].conj() for i in range(3)]
    return from_complex(a * b - herm, vec)


VARIANTS = {"I": _mul_pairs, "II": _mul_complex}


def mul(x: Octonion, y: Octonion, variant: str = "I") -> Octonion:
    try:
        return VARIANTS[variant](x, y)
    except KeyError:
        raise ValueError(f"unknown multiplication variant {variant!r}") from None


def associator(x, y, z, variant="I") -> Octonion:
    return mul(mul(x, y, variant), z, variant) - mul(x, mul(y, z, variant), variant)


def multiplication_table(variant="I"):
    """table[i][j] = (sign, k) with e_i e_j = sign * e_k, for 1 <= i, j <= 7."""
    out = {}
    for i in range(1, 8):
        for j in range(1, 8):
            out[(i, j)] = mul(Octonion.basis(i), Octonion.basis(j), variant).signed_basis()
    return out


def _entry(s):
    s = s.strip()
    sign = -1 if s.startswith("-") else 1
    s = s.lstrip("-")
    return (sign, 0) if s == "1" else (sign, int(s[1:]))


def _parse_table(rows):
    return {(i + 1, j + 1): _entry(x) for i, row in enumerate(rows) for j, x in enumerate(row.split())}


# reference tables, row e_i times column e_j
TABLE_I = _parse_table([
    "-1 e3 -e2 e5 -e4 -e7 e6",
    "-e3 -1 e1 e6 e7 -e4 -e5",
    "e2 -e1 -1 e7 -e6 e5 -e4",
    "-e5 -e6 -e7 -1 e1 e2 e3",
    "e4 -e7 e6 -e1 -1 -e3 e2",
    "e7 e4 -e5 -e2 e3 -1 -e1",
    "-e6 e5 e4 -e3 -e2 e1 -1",
])
TABLE_II = _parse_table([
    "-1 e3 -e2 e5 -e4 e7 -e6",
    "-e3 -1 e1 -e6 e7 e4 -e5",
    "e2 -e1 -1 e7 e6 -e5 -e4",
    "-e5 e6 -e7 -1 e1 -e2 e3",
    "e4 -e7 -e6 -e1 -1 e3 e2",
    "-e7 -e4 e5 e2 -e3 -1 e1",
    "e6 e5 e4 -e3 -e2 -e1 -1",
])


def table_mismatches(variant="I", reference=None):
    ref = reference or (TABLE_I if variant == "I" else TABLE_II)
    got = multiplication_table(variant)
    return sorted(k for k in ref if ref[k] != got[k])


def check_axioms(variant="I") -> bool:
    """e_k^2 = -1, anticommutation, and every basis product is +-e_k with k != i, j."""
    t = multiplication_table(variant)
    for i in range(1, 8):
        if t[(i, i)] != (-1, 0):
            return False
        for j in range(1, 8):
            if i == j:
                continue
            if t[(i, j)] is None or t[(i, j)][1] in (0, i, j):
                return False
            if t[(j, i)] != (-t[(i, j)][0], t[(i, j)][1]):
                return False
    return True


def iso_13(x: Octonion) -> Octonion:
    """a + (m1, m2, m3) -> a + (m1, m2, -conj(m3)); carries variant I to variant II."""
    a, m = to_complex(x)
    return from_complex(a, [m[0], m[1], -m[2].conj()])


def _unit(s, name):
    if s.norm2() != 1:
        raise ValueError(f"{name} must be a unit quaternion, |{name}|^2 = {s.norm2()}")


def phi(s: Quaternion, x: Octonion) -> Octonion:
    """(p, q) -> (s p s^-1, q s^-1)."""
    _unit(s, "s")
    p, q = to_pair(x)
    si = s.inverse()
    return from_pair(s * p * si, q * si)


def psi(t: Quaternion, x: Octonion) -> Octonion:
    """(p, q) -> (p, t q)."""
    _unit(t, "t")
    p, q = to_pair(x)
    return from_pair(p, t * q)


def s6_tangent_J(u: Octonion, v: Octonion, variant="I") -> Octonion:
    """J_u(v) = u v on T_u S^6."""
    if u.real() != 0 or u.norm2() != 1:
        raise ValueError("u must be an imaginary unit octonion")
    if v.real() != 0:
        raise ValueError("v must be imaginary")
    if mul(u, v, variant).real() != 0:
        raise ValueError("v is not tangent at u: Re(uv) != 0")
    return mul(u, v, variant)


def split_s2s4(u: Octonion):
    n1 = Octonion([0, u.c[1], u.c[2], u.c[3], 0, 0, 0, 0])
    n2 = Octonion([u.c[0], 0, 0, 0] + list(u.c[4:]))
    return n1, n2


def s2s4_tangent_J(u: Octonion, v: Octonion, variant="I") -> Octonion:
    """J_u(v) = (n2 n1) v on T_u(S^2 x S^4)."""
    n1, n2 = split_s2s4(u)
    if n1.norm2() != 1 or n2.norm2() != 1:
        raise ValueError("u is not on S^2 x S^4")
    if inner(n1, v) != 0 or inner(n2, v) != 0:
        raise ValueError("v is not tangent at u")
    return mul(mul(n2, n1, variant), v, variant)


# --- SU(3) on C^3 ---

def _matvec(A, m):
    return [sum((A[i][j] * m[j] for j in range(3)), QI()) for i in range(3)]


def _det3(A):
    return (A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
            - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
            + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]))


def is_special_unitary(A) -> bool:
    A = [[_qi(x) for x in row] for row in A]
    for i in range(3):
        for j in range(3):
            s = sum((A[k][i].conj() * A[k][j] for k in range(3)), QI())
            if s != QI(int(i == j)):
                return False
    return _det3(A) == QI(1)


def su3_act(A, x: Octonion) -> Octonion:
    a, m = to_complex(x)
    return from_complex(a, _matvec([[_qi(v) for v in row] for row in A], m))


def su3_preserves(A, trials=50, rng=None) -> bool:
    """a + m -> a + A m respects the variant II product (all basis pairs plus samples)."""
    if not is_special_unitary(A):
        raise ValueError("A must satisfy A^dagger A = I and det A = 1 exactly")
    rng = rng or random.Random(0)
    pairs = [(Octonion.basis(i), Octonion.basis(j)) for i in range(8) for j in range(8)]
    pairs += [(random_octonion(rng), random_octonion(rng)) for _ in range(trials)]
    return all(su3_act(A, mul(x, y, "II")) == mul(su3_act(A, x), su3_act(A, y), "II") for x, y in pairs)


# --- exact random samples ---

def random_fraction(rng, span=9):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_octonion(rng, span=9):
    return Octonion([random_fraction(rng, span) for _ in range(8)])


def random_quaternion(rng, span=9):
    return Quaternion([random_fraction(rng, span) for _ in range(4)])


def rational_sphere_point(rng, dim, span=9):
    """A point of the unit sphere S^dim in Q^(dim+1) via inverse stereographic projection."""
    y = [random_fraction(rng, span) for _ in range(dim)]
    r = sum(x * x for x in y)
    return [2 * x / (r + 1) for x in y] + [(r - 1) / (r + 1)]


def random_unit_quaternion(rng, span=9):
    return Quaternion(rational_sphere_point(rng, 3, span))


def random_s6_point(rng, span=9):
    return Octonion([0] + rational_sphere_point(rng, 6, span))


def random_s6_tangent(rng, u, span=9):
    w = random_octonion(rng, span).imag()
    return w - u.scale(inner(w, u))


def random_s2s4_point(rng, span=9):
    a = rational_sphere_point(rng, 2, span)
    b = rational_sphere_point(rng, 4, span)
    return Octonion([b[0], a[0], a[1], a[2], b[1], b[2], b[3], b[4]])


def random_s2s4_tangent(rng, u, span=9):
    n1, n2 = split_s2s4(u)
    w = random_octonion(rng, span)
    return w - n1.scale(inner(w, n1)) - n2.scale(inner(w, n2))


# --- the full check report ---

def oct_check(samples=100, seed=0) -> dict:
    rng = random.Random(seed)
    e = Octonion.basis
    out = {}
    out["table_I"] = not table_mismatches("I")
    out["table_II"] = not table_mismatches("II")
    out["axioms_I"] = check_axioms("I")
    out["axioms_II"] = check_axioms("II")
    out["printed_pair_rule_has_left_identity"] = all(
        printed_pair_product(e(0), e(k)) == e(k) for k in range(8))
    out["iso_13_homomorphism"] = all(
        iso_13(mul(e(i), e(j), "I")) == mul(iso_13(e(i)), iso_13(e(j)), "II")
        for i in range(8) for j in range(8))
    ok = True
    for _ in range(samples):
        s, t = random_unit_quaternion(rng), random_unit_quaternion(rng)
        x, y = random_octonion(rng), random_octonion(rng)
        xy = x * y
        ok = ok and phi(s, xy) == phi(s, x) * phi(s, y) and psi(t, xy) == psi(t, x) * psi(t, y)
        ok = ok and phi(s, psi(t, x)) == psi(t, phi(s, x))
    out["phi_psi_automorphisms"] = ok
    ok = True
    for _ in range(samples):
        u = random_s6_point(rng)
        v = random_s6_tangent(rng, u)
        jv = s6_tangent_J(u, v)
        ok = ok and jv.real() == 0 and (u * jv).real() == 0 and s6_tangent_J(u, jv) == -v
    out["J_S6"] = ok
    ok = True
    for _ in range(samples):
        u = random_s2s4_point(rng)
        v = random_s2s4_tangent(rng, u)
        jv = s2s4_tangent_J(u, v)
        n1, n2 = split_s2s4(u)
        ok = ok and inner(n1, jv) == 0 and inner(n2, jv) == 0 and s2s4_tangent_J(u, jv) == -v
    out["J_S2xS4"] = ok
    i = QI(0, 1)
    out["su3"] = su3_preserves([[i, 0, 0], [0, i, 0], [0, 0, -1]], trials=20, rng=rng)
    ok = True
    for variant in ("I", "II"):
        for _ in range(samples):
            x, y = random_octonion(rng), random_octonion(rng)
            ok = ok and mul(x, y, variant).norm2() == x.norm2() * y.norm2()
    out["norm_multiplicative"] = ok
    passed = all(v for k, v in out.items() if k != "printed_pair_rule_has_left_identity")
    return {"checks": out, "ok": passed,
            "notes": ["pair rule implemented with first component p1 p2 - conj(q2) q1; "
                      "the reading p1 q1 - conj(q2) q1 fails the left-identity check"]}

"""Small exact toolkit for polynomials of degree <= 3 and their real roots.

Polynomials are coefficient tuples, lowest degree first.  Real roots are
isolated with Sturm sequences and refined by bisection on exact
rationals; arithmetic in ``Q(lambda)`` is done modulo the minimal
polynomial of ``lambda``, and signs of field elements are decided by
interval evaluation on a shrinking isolating interval.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd
from typing import Iterable, Sequence

Poly = tuple  # of Fraction, lowest degree first


# -- dense rational polynomials ----------------------------------------------

def ptrim(p: Iterable) -> Poly:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def pdeg(p: Poly) -> int:
    return len(p) - 1


def padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return ptrim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def pscale(a: Poly, k) -> Poly:
    return ptrim(c * k for c in a)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, pscale(b, -1))


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return ptrim(out)


def pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        k = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = k
        for i, c in enumerate(b):
            a[shift + i] -= k * c
        a = list(ptrim(a))
    return ptrim(q), ptrim(a)


def pmonic(p: Poly) -> Poly:
    return pscale(p, 1 / p[-1]) if p else p


def pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def pderiv(p: Poly) -> Poly:
    return ptrim(i * c for i, c in enumerate(p) if i)


def peval(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def primitive_int(p: Poly) -> tuple[int, ...]:
    """Scale a rational polynomial to coprime integers with positive leading coefficient."""
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if p[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients lowest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        if not c:
            raise ValueError("zero polynomial")
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def from_rational(cls, p: Poly) -> IntPolynomial:
        return cls(primitive_int(ptrim(p)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def as_poly(self) -> Poly:
        return ptrim(self.coeffs)

    def __call__(self, x):
        return peval(self.coeffs, x)

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            body = {0: f"{mag}", 1: "x" if mag == 1 else f"{mag}*x"}.get(
                i, f"x^{i}" if mag == 1 else f"{mag}*x^{i}")
            terms.append(("-" if c < 0 else "+") + " " + body)
        s = " ".join(terms)
        return s[2:] if s.startswith("+") else "-" + s[2:]


# -- real roots ---------------------------------------------------------------

def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, pderiv(p)]
    while seq[-1]:
        seq.append(pscale(pdivmod(seq[-2], seq[-1])[1], -1))
    return seq[:-1]


def _variations(seq: Sequence[Poly], x: Fraction) -> int:
    signs = [s for s in ((peval(q, x) > 0) - (peval(q, x) < 0) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: Sequence[Poly], a: Fraction, b: Fraction) -> int:
    """Distinct real roots in ``(a, b]`` of the squarefree head of a Sturm sequence."""
    return _variations(seq, a) - _variations(seq, b)


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: every root has modulus below it."""
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def squarefree(p: Poly) -> Poly:
    return pmonic(pdivmod(p, pgcd(p, pderiv(p)))[0]) if pdeg(p) > 0 else pmonic(p)


def isolate_real_roots(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals, ascending, each holding exactly one real root of ``p``.

    An interval is either degenerate ``(r, r)`` (exact rational root) or
    open-closed ``(a, b]`` with ``p(a) != 0``.
    """
    p = squarefree(ptrim(p))
    if pdeg(p) < 1:
        return []
    seq = sturm_sequence(p)
    bound = root_bound(p)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        n = count_roots(seq, a, b)
        if n == 0:
            continue
        if n == 1:
            if peval(p, b) == 0:
                out.append((b, b))
            else:
                out.append((a, b))
            continue
        m = (a + b) / 2
        stack.append((a, m))
        stack.append((m, b))
    return sorted(out)


def refine(p: Poly, iv: tuple[Fraction, Fraction], width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval of a simple root until narrower than ``width``."""
    a, b = iv
    if a == b:
        return iv
    fa = peval(p, a)
    while b - a > width:
        m = (a + b) / 2
        fm = peval(p, m)
        if fm == 0:
            return (m, m)
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    if peval(p, b) == 0:
        return (b, b)
    return (a, b)


def rational_roots(p: Poly) -> list[Fraction]:
    """Rational roots of ``p`` (no multiplicity), via the monic integer transform."""
    ints = primitive_int(ptrim(p))
    n, lead = len(ints) - 1, ints[-1]
    if n < 1:
        return []
    # lead^(n-1) p(y / lead) is monic with integer coefficients: rational roots become integers
    monic = tuple(c * lead ** (n - 1 - i) if i < n else 1 for i, c in enumerate(ints))
    sqf = squarefree(ptrim(monic))
    roots = set()
    for a, b in isolate_real_roots(sqf):
        a, b = refine(sqf, (a, b), Fraction(1, 4))
        for k in range(floor(a), floor(b) + 2):
            if a <= k <= b and peval(sqf, k) == 0:
                roots.add(Fraction(k, lead))
    return sorted(roots)


def factor(p: Poly) -> list[tuple[IntPolynomial, int]]:
    """Irreducible factors over Q with multiplicities, for ``deg p <= 3``.

    Linear factors are split off by rational roots; the cofactor that is
    left has no rational root, hence is irreducible when of degree 2 or 3.
    """
    p = ptrim(p)
    if pdeg(p) > 3:
        raise ValueError("factoring supported only up to degree 3")
    out: list[tuple[IntPolynomial, int]] = []
    for r in rational_roots(p):
        lin = (-r, Fraction(1))
        mult = 0
        while True:
            q, rem = pdivmod(p, lin)
            if rem:
                break
            p, mult = q, mult + 1
        out.append((IntPolynomial.from_rational(lin), mult))
    if pdeg(p) >= 1:
        out.append((IntPolynomial.from_rational(p), 1))
    return out


# -- algebraic numbers and the field they generate -----------------------------

@dataclass(frozen=True)
class AlgebraicNumber:
    """Real algebraic number: irreducible ``min_poly`` plus an isolating interval."""

    min_poly: IntPolynomial
    isolating_interval: tuple[Fraction, Fraction]

    @classmethod
    def rational(cls, r) -> AlgebraicNumber:
        r = Fraction(r)
        return cls(IntPolynomial((-r.numerator, r.denominator)), (r, r))

    @property
    def degree(self) -> int:
        return self.min_poly.degree

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def exact_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not rational")
        c0, c1 = self.min_poly.coeffs
        return Fraction(-c0, c1)

    def refined(self, width) -> AlgebraicNumber:
        if self.is_rational:
            r = self.exact_value()
            return AlgebraicNumber(self.min_poly, (r, r))
        iv = refine(self.min_poly.as_poly(), self.isolating_interval, Fraction(width))
        return AlgebraicNumber(self.min_poly, iv)

    def __float__(self) -> float:
        a, b = self.refined(Fraction(1, 2 ** 60)).isolating_interval
        return float((a + b) / 2)

    def __str__(self) -> str:
        a, b = self.isolating_interval
        return f"root of {self.min_poly} in [{a}, {b}]"


def real_roots(p: IntPolynomial) -> list[AlgebraicNumber]:
    """All distinct real roots of ``p``, ascending, with their minimal polynomials."""
    out = []
    for f, _ in factor(p.as_poly()):
        if f.degree == 1:
            out.append(AlgebraicNumber(f, (Fraction(-f.coeffs[0], f.coeffs[1]),) * 2))
        else:
            out.extend(AlgebraicNumber(f, iv) for iv in isolate_real_roots(f.as_poly()))
    return sorted(out, key=_SortKey)


def compare(x: AlgebraicNumber, y: AlgebraicNumber) -> int:
    """Order two real algebraic numbers that are known to be distinct (or both rational)."""
    while True:
        (a1, b1), (a2, b2) = x.isolating_interval, y.isolating_interval
        if a1 == b1 and a2 == b2:
            return (a1 > a2) - (a1 < a2)
        # a non-degenerate interval (a, b] never has its root at b
        if b1 <= a2:
            return -1
        if b2 <= a1:
            return 1
        if b1 - a1 >= b2 - a2:
            x = x.refined((b1 - a1) / 2)
        else:
            y = y.refined((b2 - a2) / 2)


class _SortKey:
    def __init__(self, x: AlgebraicNumber) -> None:
        self.x = x

    def __lt__(self, other: _SortKey) -> bool:
        return compare(self.x, other.x) < 0


class NumberField:
    """``Q(theta)`` for a real algebraic ``theta``, power basis ``1, theta, theta^2``."""

    def __init__(self, generator: AlgebraicNumber) -> None:
        self.generator = generator
        self.modulus = pmonic(generator.min_poly.as_poly())
        self._interval = generator.isolating_interval

    @property
    def degree(self) -> int:
        return pdeg(self.modulus)

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            return value
        return FieldElement(self, ptrim((Fraction(value),)))

    def element(self, coeffs: Iterable) -> FieldElement:
        return FieldElement(self, pdivmod(ptrim(coeffs), self.modulus)[1])

    @property
    def theta(self) -> FieldElement:
        return self.element((0, 1))

    def interval(self, width: Fraction | None = None) -> tuple[Fraction, Fraction]:
        """Current isolating interval of the generator, refined to ``width`` if given."""
        if width is not None and self._interval[1] - self._interval[0] > width:
            self._interval = refine(self.modulus, self._interval, width)
        return self._interval

    def _halve(self) -> None:
        a, b = self._interval
        if a != b:
            self._interval = refine(self.modulus, self._interval, (b - a) / 2)


def _interval_eval(p: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    acc = (Fraction(0), Fraction(0))
    for c in reversed(p):
        prods = (acc[0] * lo, acc[0] * hi, acc[1] * lo, acc[1] * hi)
        acc = (min(prods) + c, max(prods) + c)
    return acc


@dataclass(frozen=True, eq=False)
class FieldElement:
    field: NumberField
    coeffs: Poly = field(default=())

    def _lift(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        return self.field(other)

    def __add__(self, other) -> FieldElement:
        return FieldElement(self.field, padd(self.coeffs, self._lift(other).coeffs))

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, pscale(self.coeffs, -1))

    def __sub__(self, other) -> FieldElement:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> FieldElement:
        return self._lift(other) - self

    def __mul__(self, other) -> FieldElement:
        return self.field.element(pmul(self.coeffs, self._lift(other).coeffs))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid: s * self + t * modulus = 1
        r0, r1 = self.field.modulus, self.coeffs
        s0, s1 = (), (Fraction(1),)
        while pdeg(r1) > 0:
            q, r = pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, psub(s0, pmul(q, s1))
        return self.field.element(pscale(s1, 1 / r1[0]))

    def __truediv__(self, other) -> FieldElement:
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other) -> FieldElement:
        return self._lift(other) * self.inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, FieldElement)):
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def rational_value(self) -> Fraction | None:
        return self.coeffs[0] if len(self.coeffs) == 1 else (Fraction(0) if not self.coeffs else None)

    def enclosure(self, width: Fraction | None = None) -> tuple[Fraction, Fraction]:
        """Rational interval containing the element, narrower than ``width`` if given."""
        lo, hi = _interval_eval(self.coeffs, *self.field.interval())
        while width is not None and hi - lo > width:
            self.field._halve()
            a, b = self.field.interval()
            lo, hi = _interval_eval(self.coeffs, a, b)
            if a == b:
                break
        return lo, hi

    def sign(self) -> int:
        if self.is_zero():
            return 0
        while True:
            lo, hi = _interval_eval(self.coeffs, *self.field.interval())
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            self.field._halve()

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __float__(self) -> float:
        lo, hi = self.enclosure(Fraction(1, 2 ** 64))
        return float((lo + hi) / 2)

    def min_poly(self) -> IntPolynomial:
        """Minimal polynomial over Q, from the characteristic polynomial of multiplication."""
        d = self.field.degree
        cols = []
        for j in range(d):
            prod = (self * self.field.element((0,) * j + (1,))).coeffs
            cols.append([prod[i] if i < len(prod) else Fraction(0) for i in range(d)])
        mat = [[cols[j][i] for j in range(d)] for i in range(d)]
        chi = charpoly(mat)
        for f, _ in factor(chi):
            value = self.field(0)
            for c in reversed(f.coeffs):
                value = value * self + c
            if value.is_zero():
                return f
        raise ArithmeticError("no factor of the characteristic polynomial vanishes")

    def to_algebraic(self) -> AlgebraicNumber:
        f = self.min_poly()
        if f.degree == 1:
            return AlgebraicNumber.rational(Fraction(-f.coeffs[0], f.coeffs[1]))
        poly = f.as_poly()
        roots = isolate_real_roots(poly)
        width = Fraction(1, 16)
        while True:
            lo, hi = self.enclosure(width)
            hits = [iv for iv in roots if iv[0] <= hi and iv[1] >= lo]
            if len(hits) == 1:
                return AlgebraicNumber(f, hits[0])
            width /= 16
            roots = [refine(poly, iv, width) for iv in roots]


def charpoly(mat: Sequence[Sequence]) -> Poly:
    """``det(x I - mat)`` by Faddeev-LeVerrier, exact over the rationals."""
    n = len(mat)
    mat = [[Fraction(v) for v in row] for row in mat]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
        m = [[sum(mat[i][t] * m[t][j] for t in range(n)) + (coeffs[n - k + 1] if i == j else 0)
              for j in range(n)] for i in range(n)]
        am = [[sum(mat[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    return ptrim(coeffs)


@dataclass(frozen=True)
class AlgebraicPoint:
    """Plane point ``(u1/u3, u2/u3)`` with homogeneous coordinates in a number field."""

    u: tuple[FieldElement, FieldElement, FieldElement]

    def __post_init__(self) -> None:
        if self.u[2].sign() <= 0:
            object.__setattr__(self, "u", tuple(-c for c in self.u))

    def homogeneous(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        return self.u

    @property
    def field(self) -> NumberField:
        return self.u[0].field

    @property
    def x(self) -> FieldElement:
        return self.u[0] / self.u[2]

    @property
    def y(self) -> FieldElement:
        return self.u[1] / self.u[2]

    def box(self, width) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        width = Fraction(width)
        return self.x.enclosure(width), self.y.enclosure(width)

    def approx(self) -> tuple[float, float]:
        return float(self.x), float(self.y)

"""Exact rational Laurent polynomials in x and differential-difference operators on them.

Operators are small expression trees (:class:`LinOp`) over the primitives
multiply-by-x^j, d/dx, reflection x -> -x, the A1 Dunkl operator and scalars.
``opMatrix``-style extraction (:func:`op_matrix`) turns an operator into an
exact matrix on a window of monomials.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import WindowOverflow


def as_fraction(value):
    """Parse ints, Fractions and ``"p/q"`` strings; floats are rejected."""
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an exact rational")
    return Fraction(value)


def mu_number(n, mu):
    """Dunkl eigenvalue on x^n: ``n + mu*(1 - (-1)^n)``, so n + 2*mu for odd n."""
    return n + (2 * Fraction(mu) if n % 2 else 0)


def mu_number_printed(n, mu):
    """The mu-number with the factor ``2*mu*(1 - (-1)^n)`` (4*mu for odd n)."""
    return n + (4 * Fraction(mu) if n % 2 else 0)


class LaurentPoly:
    """Finitely supported ``{exponent: Fraction}`` with no stored zeros."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for n, c in coeffs.items():
                c = as_fraction(c)
                if c:
                    clean[int(n)] = c
        self._c = clean

    @classmethod
    def monomial(cls, n, c=1):
        return cls({n: c})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def from_coeffs(cls, coeffs, lo=0):
        """Build from a list of coefficients for x^lo, x^(lo+1), ..."""
        return cls({lo + i: c for i, c in enumerate(coeffs)})

    @property
    def coeffs(self):
        return dict(self._c)

    def __getitem__(self, n):
        return self._c.get(n, Fraction(0))

    def items(self):
        return self._c.items()

    def support(self):
        return sorted(self._c)

    def is_zero(self):
        return not self._c

    def degree(self):
        if not self._c:
            raise ValueError("degree of the zero polynomial")
        return max(self._c)

    def low_degree(self):
        if not self._c:
            raise ValueError("low degree of the zero polynomial")
        return min(self._c)

    def leading_coeff(self):
        return self._c[self.degree()]

    def is_polynomial(self):
        return all(n >= 0 for n in self._c)

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        out = dict(self._c)
        for n, c in other._c.items():
            out[n] = out.get(n, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({n: -c for n, c in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            out = {}
            for n1, c1 in self._c.items():
                for n2, c2 in other._c.items():
                    out[n1 + n2] = out.get(n1 + n2, 0) + c1 * c2
            return LaurentPoly(out)
        other = as_fraction(other)
        return LaurentPoly({n: c * other for n, c in self._c.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = as_fraction(scalar)
        return LaurentPoly({n: c / scalar for n, c in self._c.items()})

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == LaurentPoly.const(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def shift(self, j):
        return LaurentPoly({n + j: c for n, c in self._c.items()})

    def invert_variable(self):
        """p(1/x)."""
        return LaurentPoly({-n: c for n, c in self._c.items()})

    def __call__(self, x):
        x = as_fraction(x)
        return sum((c * x**n for n, c in self._c.items()), Fraction(0))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"


def format_poly(p, var="x"):
    """Canonical text: descending exponents, e.g. ``"x^2 - 1/3*x - 1/3"``."""
    if p.is_zero():
        return "0"
    pieces = []
    for n in sorted(p.coeffs, reverse=True):
        c = p[n]
        mag = abs(c)
        if n == 0:
            mono = ""
        elif n == 1:
            mono = var
        else:
            mono = f"{var}^{n}"
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def reflect(p):
    """R p(x) = p(-x)."""
    return LaurentPoly({n: (-c if n % 2 else c) for n, c in p.items()})


def derivative(p):
    return LaurentPoly({n - 1: n * c for n, c in p.items() if n})


def dunkl(mu, p):
    """A1 Dunkl operator d/dx + (mu/x)(1 - R); on x^n gives mu_number(n, mu) x^(n-1)."""
    mu = as_fraction(mu)
    return derivative(p) + (p - reflect(p)).shift(-1) * mu


# ---------------------------------------------------------------------------
# operator trees


class LinOp:
    """Base class of operator trees. Use ``+``, ``-`` and ``@`` (composition)."""

    def apply(self, p):
        raise NotImplementedError

    def __call__(self, p):
        return self.apply(p)

    def __add__(self, other):
        other = _to_op(other)
        return Add((self, other))

    def __radd__(self, other):
        return _to_op(other) + self

    def __neg__(self):
        return Compose(Scalar(-1), self)

    def __sub__(self, other):
        return self + (-_to_op(other))

    def __rsub__(self, other):
        return _to_op(other) + (-self)

    def __matmul__(self, other):
        return Compose(self, _to_op(other))

    def __rmatmul__(self, other):
        return Compose(_to_op(other), self)

    def __mul__(self, other):
        # scalar multiplication only; composition is @
        if isinstance(other, LinOp):
            return Compose(self, other)
        return Compose(Scalar(as_fraction(other)), self)

    def __rmul__(self, other):
        return Compose(Scalar(as_fraction(other)), self)


def _to_op(x):
    if isinstance(x, LinOp):
        return x
    return Scalar(as_fraction(x))


@dataclass(frozen=True, eq=False)
class MulPow(LinOp):
    j: int

    def apply(self, p):
        return p.shift(self.j)

    def __repr__(self):
        return f"MulPow({self.j})"


@dataclass(frozen=True, eq=False)
class Derivative(LinOp):
    def apply(self, p):
        return derivative(p)

    def __repr__(self):
        return "Derivative()"


@dataclass(frozen=True, eq=False)
class Reflection(LinOp):
    def apply(self, p):
        return reflect(p)

    def __repr__(self):
        return "Reflection()"


@dataclass(frozen=True, eq=False)
class Dunkl(LinOp):
    mu: Fraction

    def apply(self, p):
        return dunkl(self.mu, p)

    def __repr__(self):
        return f"Dunkl({self.mu})"


@dataclass(frozen=True, eq=False)
class Scalar(LinOp):
    c: Fraction

    def apply(self, p):
        return p * self.c

    def __repr__(self):
        return f"Scalar({self.c})"


@dataclass(frozen=True, eq=False)
class Add(LinOp):
    terms: tuple

    def apply(self, p):
        out = LaurentPoly()
        for t in self.terms:
            out = out + t.apply(p)
        return out

    def __repr__(self):
        return "Add(" + ", ".join(map(repr, self.terms)) + ")"


@dataclass(frozen=True, eq=False)
class Compose(LinOp):
    """``outer`` after ``inner``."""

    outer: LinOp
    inner: LinOp

    def apply(self, p):
        return self.outer.apply(self.inner.apply(p))

    def __repr__(self):
        return f"Compose({self.outer!r}, {self.inner!r})"


IDENTITY = Scalar(Fraction(1))
X = MulPow(1)
X_INV = MulPow(-1)
D = Derivative()
R = Reflection()


def mul_poly(p):
    """Multiplication by the Laurent polynomial ``p`` as an operator tree."""
    terms = tuple(Compose(Scalar(c), MulPow(n)) for n, c in sorted(p.items()))
    if not terms:
        return Scalar(Fraction(0))
    return terms[0] if len(terms) == 1 else Add(terms)


def apply(op, p):
    return op.apply(p)


# ---------------------------------------------------------------------------
# matrices on monomial windows


@dataclass(frozen=True)
class BasisWindow:
    """Inclusive exponent range ``lo..hi`` of basis monomials."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty window {self.lo}..{self.hi}")

    @classmethod
    def parse(cls, text):
        lo, _, hi = text.partition("..")
        return cls(int(lo), int(hi))

    @property
    def size(self):
        return self.hi - self.lo + 1

    def exponents(self):
        return range(self.lo, self.hi + 1)

    def __contains__(self, n):
        return self.lo <= n <= self.hi

    def interior(self, pad=1):
        return BasisWindow(self.lo + pad, self.hi - pad)


@dataclass(frozen=True)
class OpMatrix:
    """Exact matrix of an operator; ``cols[i]`` is the image of x^(window.lo + i).

    Only the columns listed in ``col_exps`` are present; by default the whole
    window.
    """

    window: BasisWindow
    cols: tuple
    col_exps: tuple

    @property
    def rows(self):
        return tuple(tuple(col[i] for col in self.cols) for i in range(self.window.size))

    def column(self, n):
        return self.cols[self.col_exps.index(n)]

    def __matmul__(self, other):
        if self.window != other.window or self.col_exps != tuple(self.window.exponents()):
            raise ValueError("matrix product needs full square matrices on one window")
        out = []
        for col in other.cols:
            acc = [Fraction(0)] * self.window.size
            for j, v in enumerate(col):
                if v:
                    for i, a in enumerate(self.cols[j]):
                        acc[i] += a * v
            out.append(tuple(acc))
        return OpMatrix(self.window, tuple(out), other.col_exps)

    def __add__(self, other):
        self._check_same(other)
        cols = tuple(tuple(a + b for a, b in zip(c1, c2)) for c1, c2 in zip(self.cols, other.cols))
        return OpMatrix(self.window, cols, self.col_exps)

    def __sub__(self, other):
        self._check_same(other)
        cols = tuple(tuple(a - b for a, b in zip(c1, c2)) for c1, c2 in zip(self.cols, other.cols))
        return OpMatrix(self.window, cols, self.col_exps)

    def scale(self, c):
        c = as_fraction(c)
        return OpMatrix(self.window, tuple(tuple(c * a for a in col) for col in self.cols), self.col_exps)

    def _check_same(self, other):
        if self.window != other.window or self.col_exps != other.col_exps:
            raise ValueError("shape mismatch")

    def is_zero(self):
        return all(not a for col in self.cols for a in col)

    def to_json(self):
        return {
            "window": {"lo": self.window.lo, "hi": self.window.hi},
            "columns": list(self.col_exps),
            "cols": [[str(a) for a in col] for col in self.cols],
        }


def identity_matrix(window, col_exps=None):
    col_exps = tuple(window.exponents()) if col_exps is None else tuple(col_exps)
    cols = []
    for n in col_exps:
        cols.append(tuple(Fraction(1 if m == n else 0) for m in window.exponents()))
    return OpMatrix(window, tuple(cols), col_exps)


def op_matrix(op, window, columns=None):
    """Matrix of ``op`` on ``window``.

    Raises :class:`WindowOverflow` if the image of a requested basis monomial
    has support outside the window. ``columns`` restricts which monomials are
    mapped (used to compare identities on interior columns only).
    """
    col_exps = tuple(window.exponents()) if columns is None else tuple(columns)
    cols = []
    for n in col_exps:
        image = op.apply(LaurentPoly.monomial(n))
        for m in image.support():
            if m not in window:
                raise WindowOverflow(n, m)
        cols.append(tuple(image[m] for m in window.exponents()))
    return OpMatrix(window, tuple(cols), col_exps)

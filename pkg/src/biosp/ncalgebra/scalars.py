"""Commutative polynomials in the parameters m2, m3, m4 with rational coefficients."""

from fractions import Fraction

PARAM_NAMES = ("m2", "m3", "m4")
_ZERO_EXP = (0, 0, 0)


def _sort_key(exps):
    # graded lexicographic, highest first
    return (-sum(exps), tuple(-e for e in exps))


class ParamScalar:
    """Polynomial in (m2, m3, m4) stored as ``{(i, j, k): Fraction}``.

    Instances are immutable and hashable. Zero coefficients are never stored,
    so the zero polynomial has an empty ``terms`` mapping.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(exps)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c):
        return cls({_ZERO_EXP: c})

    @classmethod
    def param(cls, name):
        idx = PARAM_NAMES.index(name)
        exps = [0, 0, 0]
        exps[idx] = 1
        return cls({tuple(exps): 1})

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(e == _ZERO_EXP for e in self._terms)

    def constant_value(self):
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def degree(self):
        return max((sum(e) for e in self._terms), default=0)

    def evaluate(self, m2, m3, m4):
        vals = (Fraction(m2), Fraction(m3), Fraction(m4))
        total = Fraction(0)
        for exps, c in self._terms.items():
            t = c
            for v, e in zip(vals, exps):
                t *= v**e
            total += t
        return total

    @staticmethod
    def _coerce(other):
        if isinstance(other, ParamScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return ParamScalar.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exps, c in other._terms.items():
            out[exps] = out.get(exps, 0) + c
        return ParamScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamScalar({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return ParamScalar(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a parameter polynomial")
        result = ParamScalar.const(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda item: _sort_key(item[0]))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(PARAM_NAMES, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if factors and mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"ParamScalar({self})"

"""Linear combinations of words in the osp(1,2) generators."""

from dataclasses import dataclass
from fractions import Fraction

from .scalars import ParamScalar

RAW_GENERATORS = ("A+", "A0", "A-", "P")
NAMED_ELEMENTS = ("Q", "K1", "K2", "K3", "W1", "W2", "W3", "C")
GENERATORS = RAW_GENERATORS + NAMED_ELEMENTS


@dataclass(frozen=True, order=True)
class NCMonomial:
    """Normal-ordered word ``A+^a A0^k A-^e P^d`` with ``d`` in {0, 1}."""

    a: int = 0
    k: int = 0
    e: int = 0
    d: int = 0

    def __post_init__(self):
        if min(self.a, self.k, self.e) < 0 or self.d not in (0, 1):
            raise ValueError(f"invalid normal monomial {self!r}")

    def word(self):
        return ("A+",) * self.a + ("A0",) * self.k + ("A-",) * self.e + ("P",) * self.d

    @classmethod
    def from_word(cls, word):
        """Return the monomial for a word already in normal order, else None."""
        counts = [0, 0, 0, 0]
        stage = 0
        for letter in word:
            if letter not in RAW_GENERATORS:
                return None
            idx = RAW_GENERATORS.index(letter)
            if idx < stage:
                return None
            stage = idx
            counts[idx] += 1
        if counts[3] > 1:
            return None
        return cls(*counts)

    def degree(self):
        return self.a + self.k + self.e + self.d


def word_str(word):
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        parts.append(word[i] if run == 1 else f"{word[i]}^{run}")
        i = j
    return "*".join(parts)


def _word_key(word):
    m = NCMonomial.from_word(word)
    if m is not None:
        return (0, -m.degree(), -m.a, -m.k, -m.e, -m.d)
    return (1, -len(word), tuple(GENERATORS.index(x) for x in word))


class NCExpr:
    """Immutable sum of words with :class:`ParamScalar` coefficients.

    Words are tuples of generator names. Arbitrary words are allowed (the
    parser emits them unreduced); :func:`biosp.ncalgebra.normal_order`
    reduces to normal-ordered words only.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for word, c in terms.items():
                if not isinstance(c, ParamScalar):
                    c = ParamScalar.const(c)
                if not c.is_zero():
                    word = tuple(word)
                    prev = clean.get(word)
                    c = c if prev is None else prev + c
                    if c.is_zero():
                        clean.pop(word, None)
                    else:
                        clean[word] = c
        self._terms = clean

    @classmethod
    def scalar(cls, c):
        if not isinstance(c, ParamScalar):
            c = ParamScalar.const(c)
        return cls({(): c})

    @classmethod
    def gen(cls, name):
        if name not in GENERATORS:
            raise ValueError(f"unknown generator {name!r}")
        return cls({(name,): 1})

    @classmethod
    def monomial(cls, mono, coeff=1):
        return cls({mono.word(): coeff})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def is_normal(self):
        return all(NCMonomial.from_word(w) is not None for w in self._terms)

    def letters(self):
        return {x for w in self._terms for x in w}

    def degree(self):
        return max((len(w) for w in self._terms), default=0)

    @staticmethod
    def _coerce(other):
        if isinstance(other, NCExpr):
            return other
        if isinstance(other, (int, Fraction, ParamScalar)):
            return NCExpr.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out[w] + c if w in out else c
        return NCExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return NCExpr({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        """Concatenation product; no rewriting happens here."""
        if isinstance(other, (int, Fraction, ParamScalar)):
            return NCExpr({w: c * other for w, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                c = c1 * c2
                out[w] = out[w] + c if w in out else c
        return NCExpr(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, ParamScalar)):
            return NCExpr({w: other * c for w, c in self._terms.items()})
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        result = NCExpr.scalar(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for w in sorted(self._terms, key=_word_key):
            c = self._terms[w]
            ws = word_str(w)
            if c.is_constant():
                v = c.constant_value()
                sign = "-" if v < 0 else "+"
                mag = abs(v)
                body = ws if (mag == 1 and w) else (str(mag) if not w else f"{mag}*{ws}")
            else:
                sign = "+"
                body = f"({c})" if not w else f"({c})*{ws}"
            out.append((sign, body))
        sign, body = out[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"NCExpr({self})"


def commutator(x, y):
    return x * y - y * x


def anticommutator(x, y):
    return x * y + y * x

"""Substitution of named elements and PBW normal ordering in U(osp(1,2)) with P.

The normal order is ``A+^a A0^k A-^e P^d``. Reduction applies the rules

    A- A+ -> 2 A0 - A+ A-        A0 A+ -> A+ A0 + A+      A- A0 -> A0 A- + A-
    P A+  -> -A+ P               P A-  -> -A- P           P A0  -> A0 P
    P P   -> 1

by right-multiplying a normal monomial with one letter at a time. Every
recursive step strictly decreases the number of inversions of the word, so
reduction terminates.
"""

from functools import lru_cache

from .expr import NCExpr, NCMonomial, RAW_GENERATORS
from .parser import parse

# Definitions of the named elements in terms of the raw generators and of each
# other; expanded recursively.
DEFINITIONS = {
    "Q": "(A0 - A+*A- - 1/2)*P",
    "K1": "A+*A0 - m4*A+*P + (m2 + m3 + 1/2)*A+ - A- + (m4 - Q)*P - 1/2",
    "K2": "-A+*A0*P - (m2 + m3 + 1/2)*A+*P + A0*P + m4*A+ + m3*P",
    "K3": "A0*P - A-*P + m2*P",
    "W1": "2*(m4*Q + m2*m3)",
    "W2": "2*(m3*Q + m2*m4)",
    "W3": "2*(m2*Q + m3*m4)",
    "C": "K1^2 + K2^2 + K3^2",
}


@lru_cache(maxsize=None)
def _expansion(name):
    return substitute_generators(parse(DEFINITIONS[name]))


def substitute_generators(expr):
    """Replace every named element of ``expr`` by its definition in A+, A0, A-, P."""
    out = NCExpr()
    for word, coeff in expr.items():
        term = NCExpr.scalar(coeff)
        for letter in word:
            if letter in RAW_GENERATORS:
                term = term * NCExpr.gen(letter)
            else:
                term = term * _expansion(letter)
        out = out + term
    return out


# A right-multiplication result is a tuple of (monomial, Fraction) pairs plus the
# number of elementary rule applications it took.
_PARITY_SIGN = {"A+": -1, "A-": -1, "A0": 1}


def _accumulate(acc, items, scale):
    for mono, c in items:
        acc[mono] = acc.get(mono, 0) + scale * c


def _times_letter_all(items, letter):
    acc = {}
    rules = 0
    for mono, c in items:
        res, r = _times_letter(mono, letter)
        _accumulate(acc, res, c)
        rules += r
    return tuple((m, c) for m, c in acc.items() if c), rules


@lru_cache(maxsize=None)
def _times_letter(mono, letter):
    """Normal form of ``mono * letter`` as ((monomial, coeff), ...), rule count."""
    a, k, e, d = mono.a, mono.k, mono.e, mono.d
    if letter == "P":
        if d:
            return ((NCMonomial(a, k, e, 0), 1),), 1
        return ((NCMonomial(a, k, e, 1), 1),), 0
    if d:
        # move the letter left through P, then restore P on the right
        inner, rules = _times_letter(NCMonomial(a, k, e, 0), letter)
        sign = _PARITY_SIGN[letter]
        out = tuple((NCMonomial(m.a, m.k, m.e, 1), sign * c) for m, c in inner)
        return out, rules + 1
    if letter == "A-":
        return ((NCMonomial(a, k, e + 1), 1),), 0
    if letter == "A0":
        if e == 0:
            return ((NCMonomial(a, k + 1, 0), 1),), 0
        # A- A0 -> A0 A- + A-
        base = NCMonomial(a, k, e - 1)
        left, r1 = _times_letter(base, "A0")
        left, r2 = _times_letter_all(left, "A-")
        acc = {}
        _accumulate(acc, left, 1)
        _accumulate(acc, ((NCMonomial(a, k, e), 1),), 1)
        return tuple((m, c) for m, c in acc.items() if c), r1 + r2 + 1
    # letter == "A+"
    if e > 0:
        # A- A+ -> 2 A0 - A+ A-
        base = NCMonomial(a, k, e - 1)
        first, r1 = _times_letter(base, "A0")
        second, r2 = _times_letter(base, "A+")
        second, r3 = _times_letter_all(second, "A-")
        acc = {}
        _accumulate(acc, first, 2)
        _accumulate(acc, second, -1)
        return tuple((m, c) for m, c in acc.items() if c), r1 + r2 + r3 + 1
    if k > 0:
        # A0 A+ -> A+ A0 + A+
        base = NCMonomial(a, k - 1, 0)
        moved, r1 = _times_letter(base, "A+")
        first, r2 = _times_letter_all(moved, "A0")
        acc = {}
        _accumulate(acc, first, 1)
        _accumulate(acc, moved, 1)
        return tuple((m, c) for m, c in acc.items() if c), r1 + r2 + 1
    return ((NCMonomial(a + 1, 0, 0), 1),), 0


def normal_order_word(word):
    """Normal form of a single raw word: ({NCMonomial: Fraction}, rule count)."""
    items = ((NCMonomial(), 1),)
    rules = 0
    for letter in word:
        if letter not in RAW_GENERATORS:
            raise ValueError(f"named element {letter!r} must be substituted before normal ordering")
        items, r = _times_letter_all(items, letter)
        rules += r
    return dict(items), rules


def normal_order_counted(expr):
    """Return ``(normal form, number of rule applications)``."""
    out = {}
    rules = 0
    for word, coeff in expr.items():
        form, r = normal_order_word(word)
        rules += r
        for mono, c in form.items():
            w = mono.word()
            out[w] = out[w] + coeff * c if w in out else coeff * c
    return NCExpr(out), rules


def normal_order(expr):
    """PBW normal form of an expression in the raw generators."""
    return normal_order_counted(expr)[0]

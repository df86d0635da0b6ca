"""Exact arithmetic in GF(2) and GF(4).

Elements of GF(4) are the integers 0..3, standing for 0, 1, w, w^2 where
w^2 = w + 1.  With this 2-bit encoding addition is plain XOR, and the
remaining operations are constant lookup tables, so every operation is
branch-free and exact.

The canonical element order used for all lexicographic canonicalisation
downstream is 0 < 1 < w < w^2, i.e. the numeric order of the encoding.
"""

ELEMENTS = (0, 1, 2, 3)
ZERO, ONE, OMEGA, OMEGA2 = ELEMENTS

#: Textual names used in every exported file.
NAMES = ("0", "1", "w", "w2")
_BY_NAME = {n: i for i, n in enumerate(NAMES)}

#: Multiplication table.  Nonzero elements form the cyclic group {1, w, w^2}.
MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)

#: Frobenius conjugation x -> x^2; fixes GF(2), swaps w and w^2.
CONJ = (0, 1, 3, 2)

_INV = (0, 1, 3, 2)  # inv(x) = x^2 for x != 0; slot 0 guarded below


def add(a: int, b: int) -> int:
    """Field sum (characteristic 2)."""
    return a ^ b


def mul(a: int, b: int) -> int:
    """Field product."""
    return MUL[a][b]


def conj(a: int) -> int:
    """Conjugation x -> x^2, the nontrivial automorphism of GF(4)/GF(2)."""
    return CONJ[a]


def inv(a: int) -> int:
    """Multiplicative inverse; raises ZeroDivisionError on 0."""
    if a == 0:
        raise ZeroDivisionError("0 is not invertible in GF(4)")
    return _INV[a]


def name(a: int) -> str:
    """Render an element as one of "0", "1", "w", "w2"."""
    return NAMES[a]


def from_name(s: str) -> int:
    """Parse an element name produced by :func:`name`."""
    try:
        return _BY_NAME[s]
    except KeyError:
        raise ValueError(f"not a GF(4) element name: {s!r}") from None

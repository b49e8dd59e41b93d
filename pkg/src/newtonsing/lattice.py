"""Exact arithmetic on integer vectors and negative continued fractions.

Vectors in Z^3 are plain tuples of Python ints, so every operation here is
arbitrary precision.  This module carries the continued-fraction machinery
that turns a pair of primitive face normals into a string of
selfintersection numbers and the chain of primitive vectors between them.
"""

from fractions import Fraction
from math import gcd

from .errors import EqualVectors, NonCoprime, NonPrimitiveInput

IntVec3 = tuple[int, int, int]


def content(v) -> int:
    """gcd of the absolute values of the coordinates; 0 for the zero vector."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def is_primitive(v) -> bool:
    return content(v) == 1


def cross(a: IntVec3, b: IntVec3) -> IntVec3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def dot(a, b) -> int:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(k, a):
    return tuple(k * x for x in a)


def _check_pair(a: IntVec3, b: IntVec3) -> None:
    if not is_primitive(a):
        raise NonPrimitiveInput(f"{a} is not primitive")
    if not is_primitive(b):
        raise NonPrimitiveInput(f"{b} is not primitive")
    if tuple(a) == tuple(b):
        raise EqualVectors(f"{a} given twice")


def determinant_alpha(a: IntVec3, b: IntVec3) -> int:
    """Content of the cross product of two distinct primitive vectors."""
    _check_pair(a, b)
    alpha = content(cross(a, b))
    if alpha == 0:
        raise EqualVectors(f"{a} and {b} are parallel")
    return alpha


def denominator_beta(a: IntVec3, b: IntVec3, unit_choice: int = 0) -> int:
    """The unique 0 <= beta < alpha(a,b) with content(beta*a + b) = alpha.

    Found by exhaustive scan: modular inversion of a coordinate of ``a``
    fails whenever that coordinate shares a factor with alpha, while the
    scan is always correct and cheap at this scale.  When alpha = 1 the
    value is a convention and ``unit_choice`` (0 or 1) is returned.
    """
    if unit_choice not in (0, 1):
        raise ValueError("unit_choice must be 0 or 1")
    alpha = determinant_alpha(a, b)
    if alpha == 1:
        return unit_choice
    for beta in range(alpha):
        if content(vec_add(vec_scale(beta, a), b)) == alpha:
            return beta
    raise AssertionError(f"no denominator found for {a}, {b}")  # unreachable


def negative_cf(alpha: int, beta: int) -> list[int]:
    """Negative continued fraction expansion [b_1, ..., b_s] of alpha/beta.

    Satisfies b_1 - 1/(b_2 - 1/(...)) = alpha/beta with b_j >= 2 for j >= 2,
    which makes the expansion unique.  Requires 0 < beta <= alpha and
    gcd(alpha, beta) = 1.
    """
    if not (0 < beta <= alpha):
        raise ValueError(f"need 0 < beta <= alpha, got {alpha}/{beta}")
    if gcd(alpha, beta) != 1:
        raise NonCoprime(f"gcd({alpha},{beta}) != 1")
    terms = []
    while beta > 0:
        q = -(-alpha // beta)  # ceil
        terms.append(q)
        alpha, beta = beta, q * beta - alpha
    return terms


def cf_evaluate(terms) -> Fraction:
    """Evaluate [b_1, ..., b_s] back to a rational number."""
    if not terms:
        raise ValueError("empty continued fraction")
    value = Fraction(terms[-1])
    for b in reversed(terms[:-1]):
        value = b - 1 / value
    return value


def canonical_primitive_sequence(a: IntVec3, b: IntVec3, unit_choice: int = 0):
    """Chain a_1, ..., a_s with a_{i-1} - b_i a_i + a_{i+1} = 0, a_0 = a, a_{s+1} = b.

    The b_i are the negative continued fraction terms of alpha/beta.  For
    alpha = 1 the sequence is empty (unit_choice = 0) or the single vector
    a + b (unit_choice = 1).
    """
    alpha = determinant_alpha(a, b)
    if alpha == 1:
        if unit_choice == 0:
            return []
        return [vec_add(a, b)]
    beta = denominator_beta(a, b)
    terms = negative_cf(alpha, beta)
    first = vec_add(vec_scale(beta, a), b)
    if any(x % alpha for x in first):
        raise AssertionError("canonical start vector not divisible by alpha")
    seq = [tuple(x // alpha for x in first)]
    prev = tuple(a)
    for b_i in terms[:-1]:
        nxt = vec_sub(vec_scale(b_i, seq[-1]), prev)
        prev = seq[-1]
        seq.append(nxt)
    # closing relation a_{s-1} - b_s a_s + b = 0
    tail = vec_add(vec_sub(prev, vec_scale(terms[-1], seq[-1])), b)
    if tail != (0, 0, 0):
        raise AssertionError(f"canonical sequence recursion failed for {a}, {b}")
    for v in seq:
        if not is_primitive(v):
            raise AssertionError(f"non-primitive member {v} in canonical sequence")
    return seq


def pair_data(a: IntVec3, b: IntVec3, unit_choice: int = 0):
    """(alpha, beta, selfintersection string, canonical primitive sequence).

    The string is empty exactly when the sequence is; for alpha = 1 with
    unit_choice = 1 it is the single term [1].
    """
    alpha = determinant_alpha(a, b)
    if alpha == 1:
        beta = unit_choice
        if unit_choice == 0:
            return alpha, beta, [], []
        return alpha, beta, [1], [vec_add(a, b)]
    beta = denominator_beta(a, b)
    return alpha, beta, negative_cf(alpha, beta), canonical_primitive_sequence(a, b)

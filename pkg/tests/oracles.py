"""Independent reference computations used to freeze expected values.

None of these call into the library's closed forms or table kernels.
"""

from fractions import Fraction
from itertools import product


def d3_mul_rational(x, y):
    """Product formula with the half-term evaluated in exact rationals."""
    k1, k2, k3 = x
    t1, t2, t3 = y
    third = k3 + t3 + Fraction(2 * k2 + k1 - k1 * k1, 2) * t1
    assert third.denominator == 1
    return (k1 + t1, k1 * t1 + k2 + t2, int(third))


def d2_mul_plain(x, y):
    (k1, k2), (t1, t2) = x, y
    return (k1 + t1, k1 * t1 + k2 + t2)


def vsub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def vadd(x, y):
    return tuple(a + b for a, b in zip(x, y))


def star_def(mul, x, y):
    return vsub(vsub(mul(x, y), x), y)


def repeated_power(mul, inverse, a, m, zero):
    acc = zero
    f = a if m >= 0 else inverse(a)
    for _ in range(abs(m)):
        acc = mul(acc, f)
    return acc


def search_inverse(mul, x, zero, box=range(-40, 41)):
    """Brute-force a two-sided inverse of a D3 element in a coefficient box."""
    for t1 in (-x[0],):
        for t2 in box:
            for t3 in box:
                y = (t1, t2, t3)
                if mul(x, y) == zero and mul(y, x) == zero:
                    return y
    return None


def naive_subgroup(add, zero, gens):
    members = {zero, *gens}
    while True:
        new = {add(a, b) for a in members for b in members} | members
        if new == members:
            return members
        members = new


def naive_closure(add, mul, zero, gens):
    """Fixpoint of pairwise sums and products (finite: inverses come for free)."""
    members = {zero, *gens}
    while True:
        new = set(members)
        for a in members:
            for b in members:
                new.add(add(a, b))
                new.add(mul(a, b))
        if new == members:
            return members
        members = new


def naive_braid_ok(r, X):
    for x, y, z in product(X, repeat=3):
        a, b = r(x, y)
        b, c = r(b, z)
        left = (*r(a, b), c)
        p, q = r(y, z)
        s, t = r(x, p)
        if left != (s, *r(t, q)):
            return (x, y, z)
    return None

"""Pure-Python enumeration kernel; fallback for the compiled ``_kernels``.

A column word of length ``n`` is encoded as the base-4 integer whose most
significant digit is the first symbol, so numeric order is lexicographic
order.  A composition of ``n`` inverse branches has the form
``p -> (S p + v) / 2**n`` with ``S`` a signed permutation and ``v`` integral,
which lets the fixed point and its orbit be computed with integers only:
every orbit point is ``(x, y, z) / q`` for one common denominator ``q``.
"""
from math import gcd

MAX_N = None  # unbounded: Python integers

OK = 0
NOT_ADMISSIBLE = 1
OUTSIDE_C = 2
DEGENERATE = 3
ITINERARY_MISMATCH = 4
PERIOD_MISMATCH = 5
SINGULAR = 6

# per branch: source coordinate, sign, and additive half-unit of each output
_PERM = ((2, 1, 0), (0, 1, 2), (1, 0, 2), (2, 0, 1))
_SIGN = (-1, 1, 1, 1)
_SHIFT = ((1, 1, 1), (1, 0, 0), (1, 0, 0), (1, 0, 0))


def is_admissible(code, n):
    """Primitive and not made only of the symbols 1 and 2."""
    c = code
    only12 = True
    for _ in range(n):
        s = c & 3
        if s == 0 or s == 3:
            only12 = False
            break
        c >>= 2
    if only12:
        return False
    full = 1 << (2 * n)
    for d in range(1, n // 2 + 1):
        if n % d:
            continue
        block = 1 << (2 * d)
        if code == (code % block) * ((full - 1) // (block - 1)):
            return False
    return True


def solve(code, n):
    """Fixed point of the composed inverse branches for ``code``, checked against its orbit.

    Returns ``(status, x, y, z, q)`` with the reduced triple ``(x/q, y/q, z/q)``.
    """
    src = [0, 1, 2]
    sgn = [1, 1, 1]
    v = [0, 0, 0]
    D = 1
    for j in range(n):
        s = (code >> (2 * j)) & 3  # innermost branch first
        perm = _PERM[s]
        sg = _SIGN[s]
        sh = _SHIFT[s]
        src = [src[perm[0]], src[perm[1]], src[perm[2]]]
        sgn = [sg * sgn[perm[0]], sg * sgn[perm[1]], sg * sgn[perm[2]]]
        v = [sg * v[perm[0]] + sh[0] * D, sg * v[perm[1]] + sh[1] * D, sg * v[perm[2]] + sh[2] * D]
        D *= 2
    # (D*Id - S) p = v
    M = [[D if i == j else 0 for j in range(3)] for i in range(3)]
    for i in range(3):
        M[i][src[i]] -= sgn[i]
    (m00, m01, m02), (m10, m11, m12), (m20, m21, m22) = M
    c00 = m11 * m22 - m12 * m21
    c01 = m12 * m20 - m10 * m22
    c02 = m10 * m21 - m11 * m20
    det = m00 * c00 + m01 * c01 + m02 * c02
    if det == 0:
        return SINGULAR, 0, 0, 0, 0
    # adjugate rows: x = adj @ v
    x = c00 * v[0] + (m02 * m21 - m01 * m22) * v[1] + (m01 * m12 - m02 * m11) * v[2]
    y = c01 * v[0] + (m00 * m22 - m02 * m20) * v[1] + (m02 * m10 - m00 * m12) * v[2]
    z = c02 * v[0] + (m01 * m20 - m00 * m21) * v[1] + (m00 * m11 - m01 * m10) * v[2]
    q = det
    if q < 0:
        x, y, z, q = -x, -y, -z, -q
    g = gcd(gcd(x, y), gcd(z, q))
    x //= g
    y //= g
    z //= g
    q //= g
    if x + y + z != q or not (x >= y >= z > 0):
        return OUTSIDE_C, x, y, z, q
    status = _check_orbit(code, n, x, y, z, q)
    return status, x, y, z, q


def _check_orbit(code, n, x0, y0, z0, q):
    x, y, z = x0, y0, z0
    for j in range(n):
        w = (code >> (2 * (n - 1 - j))) & 3
        two_x = 2 * x
        if two_x < q:
            r = 0
        elif two_x == q:
            return DEGENERATE
        elif two_x - q >= 2 * y:
            r = 1
        elif two_x - q >= 2 * z:
            r = 2
        else:
            r = 3
        if r != w:
            return ITINERARY_MISMATCH
        if r == 0:
            x, y, z = q - 2 * z, q - 2 * y, q - two_x
        elif r == 1:
            x, y, z = two_x - q, 2 * y, 2 * z
        elif r == 2:
            x, y, z = 2 * y, two_x - q, 2 * z
        else:
            x, y, z = 2 * y, 2 * z, two_x - q
        if x == x0 and y == y0 and z == z0 and j + 1 < n:
            return PERIOD_MISMATCH
    if x != x0 or y != y0 or z != z0:
        return PERIOD_MISMATCH
    return OK


def scan(n, lo, hi):
    """Solve every admissible code in ``[lo, hi)``.

    Returns a list of ``(code, status, x, y, z, q)`` in ascending code order.
    """
    out = []
    for code in range(lo, hi):
        if is_admissible(code, n):
            out.append((code,) + solve(code, n))
    return out


def admissible_codes(n, lo, hi):
    return [code for code in range(lo, hi) if is_admissible(code, n)]

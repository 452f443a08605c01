# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; same contract as ``_kernels_py``.

All arithmetic is in signed 64-bit integers.  For ``n <= MAX_N`` every
intermediate is below ``2**(3n + 5)``, so ``MAX_N = 18`` is overflow-free.
"""

MAX_N = 18

cdef enum:
    C_OK = 0
    C_NOT_ADMISSIBLE = 1
    C_OUTSIDE_C = 2
    C_DEGENERATE = 3
    C_ITINERARY_MISMATCH = 4
    C_PERIOD_MISMATCH = 5
    C_SINGULAR = 6

OK = C_OK
NOT_ADMISSIBLE = C_NOT_ADMISSIBLE
OUTSIDE_C = C_OUTSIDE_C
DEGENERATE = C_DEGENERATE
ITINERARY_MISMATCH = C_ITINERARY_MISMATCH
PERIOD_MISMATCH = C_PERIOD_MISMATCH
SINGULAR = C_SINGULAR

ctypedef long long i64

cdef int PERM[4][3]
cdef int SIGN[4]
cdef int SHIFT[4][3]
PERM[0][:] = [2, 1, 0]
PERM[1][:] = [0, 1, 2]
PERM[2][:] = [1, 0, 2]
PERM[3][:] = [2, 0, 1]
SIGN[:] = [-1, 1, 1, 1]
SHIFT[0][:] = [1, 1, 1]
SHIFT[1][:] = [1, 0, 0]
SHIFT[2][:] = [1, 0, 0]
SHIFT[3][:] = [1, 0, 0]


cdef inline i64 _gcd(i64 a, i64 b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef bint _admissible(i64 code, int n) nogil:
    cdef i64 c = code
    cdef int k, d
    cdef i64 s, block, full, rep
    cdef bint only12 = 1
    for k in range(n):
        s = c & 3
        if s == 0 or s == 3:
            only12 = 0
            break
        c >>= 2
    if only12:
        return 0
    full = (<i64>1) << (2 * n)
    for d in range(1, n // 2 + 1):
        if n % d:
            continue
        block = (<i64>1) << (2 * d)
        rep = (full - 1) // (block - 1)
        if code == (code % block) * rep:
            return 0
    return 1


cdef int _check_orbit(i64 code, int n, i64 x0, i64 y0, i64 z0, i64 q) nogil:
    cdef i64 x = x0, y = y0, z = z0, two_x, w
    cdef int j, r
    for j in range(n):
        w = (code >> (2 * (n - 1 - j))) & 3
        two_x = 2 * x
        if two_x < q:
            r = 0
        elif two_x == q:
            return C_DEGENERATE
        elif two_x - q >= 2 * y:
            r = 1
        elif two_x - q >= 2 * z:
            r = 2
        else:
            r = 3
        if r != w:
            return C_ITINERARY_MISMATCH
        if r == 0:
            x, y, z = q - 2 * z, q - 2 * y, q - two_x
        elif r == 1:
            x, y, z = two_x - q, 2 * y, 2 * z
        elif r == 2:
            x, y, z = 2 * y, two_x - q, 2 * z
        else:
            x, y, z = 2 * y, 2 * z, two_x - q
        if x == x0 and y == y0 and z == z0 and j + 1 < n:
            return C_PERIOD_MISMATCH
    if x != x0 or y != y0 or z != z0:
        return C_PERIOD_MISMATCH
    return C_OK


cdef int _solve(i64 code, int n, i64* out) nogil:
    cdef int src[3]
    cdef int sgn[3]
    cdef i64 v[3]
    cdef int nsrc[3]
    cdef int nsgn[3]
    cdef i64 nv[3]
    cdef i64 M[3][3]
    cdef i64 D = 1, det, x, y, z, q, g
    cdef i64 c00, c01, c02
    cdef int i, j, k, s, sg
    for k in range(3):
        src[k] = k
        sgn[k] = 1
        v[k] = 0
    for j in range(n):
        s = (code >> (2 * j)) & 3
        sg = SIGN[s]
        for k in range(3):
            nsrc[k] = src[PERM[s][k]]
            nsgn[k] = sg * sgn[PERM[s][k]]
            nv[k] = sg * v[PERM[s][k]] + SHIFT[s][k] * D
        for k in range(3):
            src[k] = nsrc[k]
            sgn[k] = nsgn[k]
            v[k] = nv[k]
        D *= 2
    for i in range(3):
        for k in range(3):
            M[i][k] = D if i == k else 0
        M[i][src[i]] -= sgn[i]
    c00 = M[1][1] * M[2][2] - M[1][2] * M[2][1]
    c01 = M[1][2] * M[2][0] - M[1][0] * M[2][2]
    c02 = M[1][0] * M[2][1] - M[1][1] * M[2][0]
    det = M[0][0] * c00 + M[0][1] * c01 + M[0][2] * c02
    out[0] = out[1] = out[2] = out[3] = 0
    if det == 0:
        return C_SINGULAR
    x = c00 * v[0] + (M[0][2] * M[2][1] - M[0][1] * M[2][2]) * v[1] + (M[0][1] * M[1][2] - M[0][2] * M[1][1]) * v[2]
    y = c01 * v[0] + (M[0][0] * M[2][2] - M[0][2] * M[2][0]) * v[1] + (M[0][2] * M[1][0] - M[0][0] * M[1][2]) * v[2]
    z = c02 * v[0] + (M[0][1] * M[2][0] - M[0][0] * M[2][1]) * v[1] + (M[0][0] * M[1][1] - M[0][1] * M[1][0]) * v[2]
    q = det
    if q < 0:
        x, y, z, q = -x, -y, -z, -q
    g = _gcd(_gcd(x, y), _gcd(z, q))
    x //= g
    y //= g
    z //= g
    q //= g
    out[0] = x
    out[1] = y
    out[2] = z
    out[3] = q
    if x + y + z != q or not (x >= y and y >= z and z > 0):
        return C_OUTSIDE_C
    return _check_orbit(code, n, x, y, z, q)


def _check_n(int n):
    if n < 1 or n > MAX_N:
        raise OverflowError(f"compiled kernel supports 1 <= n <= {MAX_N}, got {n}")


def is_admissible(i64 code, int n):
    _check_n(n)
    return bool(_admissible(code, n))


def solve(i64 code, int n):
    cdef i64 out[4]
    cdef int status
    _check_n(n)
    status = _solve(code, n, out)
    return status, out[0], out[1], out[2], out[3]


def scan(int n, i64 lo, i64 hi):
    cdef i64 code
    cdef i64 out[4]
    cdef int status
    _check_n(n)
    result = []
    for code in range(lo, hi):
        if _admissible(code, n):
            status = _solve(code, n, out)
            result.append((code, status, out[0], out[1], out[2], out[3]))
    return result


def admissible_codes(int n, i64 lo, i64 hi):
    cdef i64 code
    _check_n(n)
    return [code for code in range(lo, hi) if _admissible(code, n)]

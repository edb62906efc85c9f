# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled evaluation kernels.

Same algorithms and API as ``specpack._kernels_py`` (series below x = 8,
backward recurrence above, grid scan + bisection for zeros); see that module
for the method notes.  Kept in lockstep by the backend parity tests.
"""

from libc.math cimport sin, cos, fabs, exp, log, lgamma, pow, NAN

BACKEND = "cython"

KIND_BESSEL_PRIME = 0
KIND_BESSEL = 1
KIND_SPHERICAL_PRIME = 2

cdef double _SERIES_MAX_X = 8.0
cdef double _BISECT_WIDTH = 1e-12
cdef double _RESCALE_AT = 1e250
cdef double _RESCALE_BY = 1e-250


cdef double _factorial(int m):
    cdef double f = 1.0
    cdef int k
    for k in range(2, m + 1):
        f *= k
    return f


cdef double _series_j(int m, double x):
    cdef double half = 0.5 * x
    cdef double t, s, mx2
    cdef int k
    if m > 120:
        t = exp(m * log(half) - lgamma(m + 1.0)) if half > 0.0 else 0.0
    else:
        t = pow(half, m) / _factorial(m)
    s = t
    mx2 = -half * half
    for k in range(1, 200):
        t *= mx2 / (k * (<double> k + m))
        s += t
        if fabs(t) <= 1e-17 * fabs(s):
            break
    return s


cdef void _miller_pair(double x, int ma, int mb, double *out_a, double *out_b):
    cdef int top = mb if mb > <int> x else <int> x
    cdef int start = top + 20 + <int> (10.0 * pow(x if x > 1.0 else 1.0, 1.0 / 3.0))
    if start & 1:
        start += 1
    cdef double jnext = 0.0
    cdef double jcur = 1e-30
    cdef double esum = 0.0
    cdef double va = 0.0
    cdef double vb = 0.0
    cdef double jprev, norm
    cdef int k = start
    while k > 0:
        if k == ma:
            va = jcur
        if k == mb:
            vb = jcur
        if not (k & 1):
            esum += jcur
        jprev = (2.0 * k) / x * jcur - jnext
        jnext = jcur
        jcur = jprev
        if fabs(jcur) > _RESCALE_AT:
            jcur *= _RESCALE_BY
            jnext *= _RESCALE_BY
            esum *= _RESCALE_BY
            va *= _RESCALE_BY
            vb *= _RESCALE_BY
        k -= 1
    if ma == 0:
        va = jcur
    if mb == 0:
        vb = jcur
    norm = jcur + 2.0 * esum
    out_a[0] = va / norm
    out_b[0] = vb / norm


cdef double _bessel_j_c(int order, double x):
    cdef double a, b
    if x < _SERIES_MAX_X:
        return _series_j(order, x)
    _miller_pair(x, order, order, &a, &b)
    return a


cdef double _bessel_j_prime_c(int order, double x):
    cdef double a, b
    if order == 0:
        return -_bessel_j_c(1, x)
    if x < _SERIES_MAX_X:
        return 0.5 * (_series_j(order - 1, x) - _series_j(order + 1, x))
    _miller_pair(x, order - 1, order + 1, &a, &b)
    return 0.5 * (a - b)


cdef void _sph_miller_pair(double x, int pa, int pb, double *out_a, double *out_b):
    cdef int top = pb if pb > <int> x else <int> x
    cdef int start = top + 20 + <int> (10.0 * pow(x if x > 1.0 else 1.0, 1.0 / 3.0))
    cdef double jnext = 0.0
    cdef double jcur = 1e-30
    cdef double va = 0.0
    cdef double vb = 0.0
    cdef double anchor0, anchor1 = 0.0
    cdef double jprev, sx, cx, s0, s1, scale
    cdef int k = start
    while k >= 1:
        if k == pa:
            va = jcur
        if k == pb:
            vb = jcur
        if k == 1:
            anchor1 = jcur
        jprev = (2.0 * k + 1.0) / x * jcur - jnext
        jnext = jcur
        jcur = jprev
        if fabs(jcur) > _RESCALE_AT:
            jcur *= _RESCALE_BY
            jnext *= _RESCALE_BY
            va *= _RESCALE_BY
            vb *= _RESCALE_BY
            anchor1 *= _RESCALE_BY
        k -= 1
    anchor0 = jcur
    if pa == 0:
        va = anchor0
    if pb == 0:
        vb = anchor0
    sx = sin(x)
    cx = cos(x)
    s0 = sx / x
    s1 = sx / (x * x) - cx / x
    if fabs(s0) >= fabs(s1):
        scale = s0 / anchor0
    else:
        scale = s1 / anchor1
    out_a[0] = va * scale
    out_b[0] = vb * scale


cdef double _spherical_j_c(int order, double x):
    cdef double a, b
    if order == 0:
        return sin(x) / x
    if order == 1:
        return sin(x) / (x * x) - cos(x) / x
    _sph_miller_pair(x, order, order, &a, &b)
    return b


cdef double _spherical_j_prime_c(int order, double x):
    cdef double a, b, j0, j1
    if order == 0:
        return -(sin(x) / (x * x) - cos(x) / x)
    if order == 1:
        j0 = sin(x) / x
        j1 = sin(x) / (x * x) - cos(x) / x
        return j0 - 2.0 / x * j1
    _sph_miller_pair(x, order - 1, order, &a, &b)
    return a - (order + 1.0) / x * b


cdef double _eval_c(int kind, int order, double x):
    if kind == 0:
        return _bessel_j_prime_c(order, x)
    if kind == 1:
        return _bessel_j_c(order, x)
    return _spherical_j_prime_c(order, x)


def bessel_j(int order, double x):
    """J_order(x) for order >= 0, x >= 0."""
    return _bessel_j_c(order, x)


def bessel_j_prime(int order, double x):
    """J'_order(x) via J'_0 = -J_1 and 2 J'_m = J_{m-1} - J_{m+1}."""
    return _bessel_j_prime_c(order, x)


def spherical_j(int order, double x):
    """Spherical Bessel j_order(x), x > 0."""
    return _spherical_j_c(order, x)


def spherical_j_prime(int order, double x):
    """d/dx j_order(x) via j'_p = j_{p-1} - (p+1)/x * j_p; j'_0 = -j_1."""
    return _spherical_j_prime_c(order, x)


def next_zero(int kind, int order, double x_from, double step, double x_max):
    """Scan from x_from in increments of step until the sign changes, then
    bisect the bracket down to width 1e-12.

    Returns (zero, resume) where resume is the grid point past the bracket,
    or (nan, nan) if no sign change occurs before x_max.
    """
    if kind < 0 or kind > 2:
        raise ValueError(f"unknown kind code {kind}")
    cdef double x0 = x_from
    cdef double f0 = _eval_c(kind, order, x0)
    cdef double x1, f1, lo, hi, flo, mid, fm
    if f0 == 0.0:
        x0 += 1e-9
        f0 = _eval_c(kind, order, x0)
    while x0 < x_max:
        x1 = x0 + step
        f1 = _eval_c(kind, order, x1)
        if f1 == 0.0:
            return x1, x1 + step
        if (f0 < 0.0) != (f1 < 0.0):
            lo = x0
            hi = x1
            flo = f0
            while hi - lo > _BISECT_WIDTH:
                mid = 0.5 * (lo + hi)
                fm = _eval_c(kind, order, mid)
                if fm == 0.0:
                    return mid, x1
                if (fm < 0.0) == (flo < 0.0):
                    lo = mid
                    flo = fm
                else:
                    hi = mid
            return 0.5 * (lo + hi), x1
        x0 = x1
        f0 = f1
    return NAN, NAN

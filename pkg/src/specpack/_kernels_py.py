"""Pure-Python evaluation kernels.

Scalar Bessel J, its derivative, spherical Bessel j and its derivative, plus
the grid-scan/bisection zero finder.  This module is the fallback twin of the
compiled extension ``specpack._kernels``; both expose the same five callables
and must agree to near machine precision (see tests).

Evaluation strategy:
  * x < 8: ascending power series (no destructive cancellation there).
  * x >= 8: backward recurrence started well above max(order, x), normalized
    with the even-order sum rule J_0 + 2*sum_k J_{2k} = 1 (cylindrical) or
    against the closed forms j_0, j_1 (spherical).  Backward recurrence keeps
    relative accuracy even deep in the evanescent zone, which the zero scan
    crosses for every order.
"""

import math

BACKEND = "python"

KIND_BESSEL_PRIME = 0
KIND_BESSEL = 1
KIND_SPHERICAL_PRIME = 2

_SERIES_MAX_X = 8.0
_BISECT_WIDTH = 1e-12
_RESCALE_AT = 1e250
_RESCALE_BY = 1e-250


def _series_j(m, x):
    # sum_k (-1)^k (x/2)^(m+2k) / (k! (k+m)!)
    half = 0.5 * x
    if m > 120:
        t = math.exp(m * math.log(half) - math.lgamma(m + 1.0)) if half > 0.0 else 0.0
    else:
        t = half**m / math.factorial(m)
    s = t
    mx2 = -half * half
    for k in range(1, 200):
        t *= mx2 / (k * (k + m))
        s += t
        if abs(t) <= 1e-17 * abs(s):
            break
    return s


def _miller_pair(x, ma, mb):
    # (J_ma, J_mb) for x >= _SERIES_MAX_X, ma <= mb, via backward recurrence.
    top = max(mb, int(x))
    start = top + 20 + int(10.0 * max(x, 1.0) ** (1.0 / 3.0))
    if start & 1:
        start += 1
    jnext = 0.0  # trial J at order k+1
    jcur = 1e-30  # trial J at order k
    esum = 0.0  # sum of trial J over even orders >= 2
    va = 0.0
    vb = 0.0
    k = start
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
        if abs(jcur) > _RESCALE_AT:
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
    return va / norm, vb / norm


def bessel_j(order, x):
    """J_order(x) for order >= 0, x >= 0."""
    if x < _SERIES_MAX_X:
        return _series_j(order, x)
    return _miller_pair(x, order, order)[0]


def bessel_j_prime(order, x):
    """J'_order(x) via J'_0 = -J_1 and 2 J'_m = J_{m-1} - J_{m+1}."""
    if order == 0:
        return -bessel_j(1, x)
    if x < _SERIES_MAX_X:
        return 0.5 * (_series_j(order - 1, x) - _series_j(order + 1, x))
    ja, jb = _miller_pair(x, order - 1, order + 1)
    return 0.5 * (ja - jb)


def _sph_miller_pair(x, pa, pb):
    # (j_pa, j_pb) for pa <= pb, backward recurrence anchored on j_0 / j_1.
    top = max(pb, int(x))
    start = top + 20 + int(10.0 * max(x, 1.0) ** (1.0 / 3.0))
    jnext = 0.0
    jcur = 1e-30
    va = 0.0
    vb = 0.0
    anchor1 = 0.0
    k = start
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
        if abs(jcur) > _RESCALE_AT:
            jcur *= _RESCALE_BY
            jnext *= _RESCALE_BY
            va *= _RESCALE_BY
            vb *= _RESCALE_BY
            anchor1 *= _RESCALE_BY
        k -= 1
    anchor0 = jcur  # trial j_0
    if pa == 0:
        va = anchor0
    if pb == 0:
        vb = anchor0
    sx = math.sin(x)
    cx = math.cos(x)
    s0 = sx / x
    s1 = sx / (x * x) - cx / x
    if abs(s0) >= abs(s1):
        scale = s0 / anchor0
    else:
        scale = s1 / anchor1
    return va * scale, vb * scale


def spherical_j(order, x):
    """Spherical Bessel j_order(x), x > 0."""
    if order == 0:
        return math.sin(x) / x
    if order == 1:
        return math.sin(x) / (x * x) - math.cos(x) / x
    return _sph_miller_pair(x, order, order)[1]


def spherical_j_prime(order, x):
    """d/dx j_order(x) via j'_p = j_{p-1} - (p+1)/x * j_p; j'_0 = -j_1."""
    if order == 0:
        return -(math.sin(x) / (x * x) - math.cos(x) / x)
    if order == 1:
        j0 = math.sin(x) / x
        j1 = math.sin(x) / (x * x) - math.cos(x) / x
        return j0 - 2.0 / x * j1
    ja, jb = _sph_miller_pair(x, order - 1, order)
    return ja - (order + 1.0) / x * jb


def _eval(kind, order, x):
    if kind == KIND_BESSEL_PRIME:
        return bessel_j_prime(order, x)
    if kind == KIND_BESSEL:
        return bessel_j(order, x)
    if kind == KIND_SPHERICAL_PRIME:
        return spherical_j_prime(order, x)
    raise ValueError(f"unknown kind code {kind}")


def next_zero(kind, order, x_from, step, x_max):
    """Scan from x_from in increments of step until the sign changes, then
    bisect the bracket down to width 1e-12.

    Returns (zero, resume) where resume is the grid point past the bracket,
    or (nan, nan) if no sign change occurs before x_max.
    """
    x0 = x_from
    f0 = _eval(kind, order, x0)
    if f0 == 0.0:
        x0 += 1e-9
        f0 = _eval(kind, order, x0)
    while x0 < x_max:
        x1 = x0 + step
        f1 = _eval(kind, order, x1)
        if f1 == 0.0:
            return x1, x1 + step
        if (f0 < 0.0) != (f1 < 0.0):
            lo = x0
            hi = x1
            flo = f0
            while hi - lo > _BISECT_WIDTH:
                mid = 0.5 * (lo + hi)
                fm = _eval(kind, order, mid)
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
    return math.nan, math.nan

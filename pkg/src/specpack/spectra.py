"""Complete Neumann/Dirichlet spectra of unit-volume canonical domains and
of scaled disjoint unions.

All spectra list nonzero eigenvalues only; the zero modes of a Neumann
spectrum are implicit in ``n_components`` (one constant mode per connected
component).  ``Spectrum.eigenvalue(i)`` recovers the conventional indexing:
for Neumann, mu_0 .. mu_{c-1} are 0 and mu_i for i >= c is the (i-c+1)-th
stored value; Dirichlet indexing starts at lambda_1 = first stored value.

Completeness: every generator enumerates all modes with eigenvalue below an
adaptive ceiling and only returns the first k once the k-th value sits
strictly inside the ceiling, so no eigenvalue below the last returned one can
be missing.  The disk/ball order loops terminate through the classical lower
bound j'_{m,1} >= sqrt(m(m+2)) and the monotonicity of the first zero in the
order, respectively.
"""

import csv
import io
import math
from dataclasses import dataclass
from functools import cached_property

from . import bessel

PI = math.pi
BALL_RADIUS = (3.0 / (4.0 * PI)) ** (1.0 / 3.0)  # unit-volume ball

BOUNDARY_CONDITIONS = ("neumann", "dirichlet")


@dataclass(frozen=True)
class DomainShape:
    """A canonical domain: disk, rectangle(a, b), ball, or box(a1, a2, a3)."""

    kind: str
    bc: str = "neumann"
    sides: tuple = ()

    def __post_init__(self):
        if self.bc not in BOUNDARY_CONDITIONS:
            raise ValueError(f"unknown boundary condition {self.bc!r}")
        if self.kind in ("disk", "ball"):
            if self.sides:
                raise ValueError(f"{self.kind} takes no side lengths")
        elif self.kind == "rectangle":
            if len(self.sides) != 2 or any(s <= 0 for s in self.sides):
                raise ValueError("rectangle needs two positive sides")
        elif self.kind == "box":
            if len(self.sides) != 3 or any(s <= 0 for s in self.sides):
                raise ValueError("box needs three positive sides")
        else:
            raise ValueError(f"unknown shape kind {self.kind!r}")

    @property
    def dimension(self):
        return 2 if self.kind in ("disk", "rectangle") else 3

    @property
    def volume(self):
        if self.kind in ("disk", "ball"):
            return 1.0
        return math.prod(self.sides)

    def describe(self):
        if self.kind == "rectangle":
            return f"rectangle {self.sides[0]:.6g}x{self.sides[1]:.6g}"
        if self.kind == "box":
            return "box " + "x".join(f"{s:.6g}" for s in self.sides)
        return self.kind


def disk(bc="neumann"):
    return DomainShape("disk", bc)


def rectangle(a, b, bc="neumann"):
    return DomainShape("rectangle", bc, (float(a), float(b)))


def square(bc="neumann"):
    return rectangle(1.0, 1.0, bc)


def ball():
    return DomainShape("ball", "neumann")


def box(a1, a2, a3, bc="neumann"):
    return DomainShape("box", bc, (float(a1), float(a2), float(a3)))


def cube(bc="neumann"):
    return box(1.0, 1.0, 1.0, bc)


@dataclass(frozen=True)
class Mode:
    """One eigenvalue with its quantum-number label and multiplicity."""

    label: tuple
    value: float
    multiplicity: int = 1


def _mode_sort_key(mode):
    # equal values ordered by descending-lexicographic label (matches the
    # classical tabulation order, e.g. (1,0) before (0,1) on the square)
    return (mode.value, tuple(-c for c in mode.label))


@dataclass(frozen=True)
class Spectrum:
    """Ascending nonzero eigenvalues of a domain (or disjoint union)."""

    bc: str
    dimension: int
    volume: float
    n_components: int
    modes: tuple
    count: int
    shape: DomainShape = None

    @cached_property
    def expanded(self):
        """(value, label) per eigenvalue, multiplicities written out."""
        out = []
        for m in self.modes:
            out.extend([(m.value, m.label)] * m.multiplicity)
        return out

    def nonzero_values(self, k=None):
        """The first k (default: count) nonzero eigenvalues."""
        k = self.count if k is None else k
        if k > len(self.expanded):
            raise IndexError(
                f"spectrum holds {len(self.expanded)} nonzero eigenvalues, "
                f"asked for {k}"
            )
        return [v for v, _ in self.expanded[:k]]

    def nonzero(self, i):
        """The i-th nonzero eigenvalue, i >= 1."""
        if i < 1:
            raise IndexError("nonzero eigenvalue index starts at 1")
        return self.nonzero_values(i)[i - 1]

    def eigenvalue(self, i):
        """mu_i (Neumann, zeros included) or lambda_i (Dirichlet)."""
        if self.bc == "neumann":
            if i < 0:
                raise IndexError("mu index starts at 0")
            if i < self.n_components:
                return 0.0
            return self.nonzero(i - self.n_components + 1)
        if i < 1:
            raise IndexError("lambda index starts at 1")
        return self.nonzero(i)

    def rescaled(self, volume):
        """Same domain scaled to the given total volume."""
        if volume <= 0:
            raise ValueError("volume must be positive")
        factor = _scale_factor(self.volume, volume, self.dimension)
        modes = tuple(
            Mode(m.label, m.value * factor, m.multiplicity) for m in self.modes
        )
        return Spectrum(
            bc=self.bc,
            dimension=self.dimension,
            volume=volume,
            n_components=self.n_components,
            modes=modes,
            count=self.count,
            shape=self.shape,
        )

    def to_csv(self):
        """CSV export: index,value,multiplicity,label (10 significant digits)."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "value", "multiplicity", "label"])
        index = 1
        for m in self.modes:
            writer.writerow(
                [index, f"{m.value:.10g}", m.multiplicity, ",".join(map(str, m.label))]
            )
            index += m.multiplicity
        return buf.getvalue()


def _scale_factor(vol_from, vol_to, dimension):
    # eigenvalue factor for rescaling a domain from vol_from to vol_to
    if dimension == 2:
        return vol_from / vol_to
    return (vol_from / vol_to) ** (2.0 / 3.0)


def _finalize(modes, k, bc, dimension, shape, n_components=1, volume=None):
    modes = sorted(modes, key=_mode_sort_key)
    total = 0
    kept = []
    for m in modes:
        if total >= k:
            break
        kept.append(m)
        total += m.multiplicity
    return Spectrum(
        bc=bc,
        dimension=dimension,
        volume=shape.volume if volume is None else volume,
        n_components=n_components,
        modes=tuple(kept),
        count=k,
        shape=shape,
    )


def _adaptive_modes(enumerate_below, k, lam0):
    """All modes below an adaptive ceiling, guaranteed to cover the first k."""
    lam = lam0
    for _ in range(200):
        modes = sorted(enumerate_below(lam), key=_mode_sort_key)
        total = 0
        kth = None
        for m in modes:
            total += m.multiplicity
            if total >= k:
                kth = m.value
                break
        if kth is not None and kth <= lam * (1.0 - 1e-9):
            return modes
        lam *= 1.6
    raise RuntimeError("eigenvalue ceiling failed to converge")


def _weyl_ceiling_2d(k, area):
    return 4.0 * PI * k / area * 1.3 + 30.0


def _weyl_ceiling_3d(k, vol):
    return (6.0 * PI**2 * k / vol) ** (2.0 / 3.0) * 1.3 + 30.0


def disk_spectrum(bc, k):
    """First k nonzero eigenvalues of the unit-area disk."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if bc not in BOUNDARY_CONDITIONS:
        raise ValueError(f"unknown boundary condition {bc!r}")
    table = bessel.default_table("bessel_prime" if bc == "neumann" else "bessel")
    neumann = bc == "neumann"

    def below(lam):
        xmax = math.sqrt(lam / PI)
        modes = []
        m = 0
        while m * (m + 2) <= xmax * xmax:
            q = 1
            while True:
                z = table.positive_zero(m, q)
                if z > xmax:
                    break
                label = (m, q + 1) if (neumann and m == 0) else (m, q)
                modes.append(Mode(label, PI * z * z, 1 if m == 0 else 2))
                q += 1
            m += 1
        return modes

    return _finalize(
        _adaptive_modes(below, k, _weyl_ceiling_2d(k, 1.0)), k, bc, 2, disk(bc)
    )


def rectangle_spectrum(a, b, bc, k):
    """First k nonzero eigenvalues of an a-by-b rectangle."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if a <= 0 or b <= 0:
        raise ValueError("sides must be positive")
    if bc not in BOUNDARY_CONDITIONS:
        raise ValueError(f"unknown boundary condition {bc!r}")
    lo = 0 if bc == "neumann" else 1

    def below(lam):
        modes = []
        jmax = int(a * math.sqrt(lam) / PI)
        for j in range(lo, jmax + 1):
            rem = lam - (PI * j / a) ** 2
            if rem < 0:
                continue
            kmax = int(b * math.sqrt(rem) / PI)
            for kk in range(lo, kmax + 1):
                if j == 0 and kk == 0:
                    continue
                value = PI * PI * (j * j / (a * a) + kk * kk / (b * b))
                if value <= lam:
                    modes.append(Mode((j, kk), value, 1))
        return modes

    shape = rectangle(a, b, bc)
    return _finalize(
        _adaptive_modes(below, k, _weyl_ceiling_2d(k, a * b)), k, bc, 2, shape
    )


def ball_spectrum(bc, k):
    """First k nonzero Neumann eigenvalues of the unit-volume ball."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if bc != "neumann":
        raise ValueError("only the Neumann ball spectrum is supported")
    table = bessel.default_table("spherical_prime")

    def below(lam):
        xmax = math.sqrt(lam) * BALL_RADIUS
        modes = []
        p = 0
        while True:
            z1 = table.positive_zero(p, 1)
            if z1 > xmax:
                break  # first zeros increase with the order
            q = 1
            while True:
                z = table.positive_zero(p, q)
                if z > xmax:
                    break
                modes.append(Mode((p, q), (z / BALL_RADIUS) ** 2, 2 * p + 1))
                q += 1
            p += 1
        return modes

    return _finalize(
        _adaptive_modes(below, k, _weyl_ceiling_3d(k, 1.0)), k, bc, 3, ball()
    )


def box_spectrum(a1, a2, a3, bc, k):
    """First k nonzero eigenvalues of an a1-by-a2-by-a3 box."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if min(a1, a2, a3) <= 0:
        raise ValueError("sides must be positive")
    if bc not in BOUNDARY_CONDITIONS:
        raise ValueError(f"unknown boundary condition {bc!r}")
    lo = 0 if bc == "neumann" else 1

    def below(lam):
        modes = []
        jmax = int(a1 * math.sqrt(lam) / PI)
        for j in range(lo, jmax + 1):
            rem_j = lam - (PI * j / a1) ** 2
            if rem_j < 0:
                continue
            kmax = int(a2 * math.sqrt(rem_j) / PI)
            for kk in range(lo, kmax + 1):
                rem_k = rem_j - (PI * kk / a2) ** 2
                if rem_k < 0:
                    continue
                lmax = int(a3 * math.sqrt(rem_k) / PI)
                for ll in range(lo, lmax + 1):
                    if j == 0 and kk == 0 and ll == 0:
                        continue
                    value = PI * PI * (
                        j * j / (a1 * a1) + kk * kk / (a2 * a2) + ll * ll / (a3 * a3)
                    )
                    if value <= lam:
                        modes.append(Mode((j, kk, ll), value, 1))
        return modes

    shape = box(a1, a2, a3, bc)
    return _finalize(
        _adaptive_modes(below, k, _weyl_ceiling_3d(k, a1 * a2 * a3)), k, bc, 3, shape
    )


def spectrum_of(shape, k):
    """Unit-volume spectrum of a canonical shape."""
    if shape.kind == "disk":
        return disk_spectrum(shape.bc, k)
    if shape.kind == "rectangle":
        return rectangle_spectrum(*shape.sides, shape.bc, k)
    if shape.kind == "ball":
        return ball_spectrum(shape.bc, k)
    return box_spectrum(*shape.sides, shape.bc, k)


def union_spectrum(parts, k):
    """Spectrum of a disjoint union of rescaled parts.

    ``parts`` is a list of (Spectrum, volume) pairs; each part's spectrum is
    rescaled from its own volume to the given one and the nonzero values are
    merged in ascending order.  Every part must carry at least k nonzero
    eigenvalues so the merged prefix is complete.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not parts:
        raise ValueError("parts must be nonempty")
    bc = parts[0][0].bc
    dim = parts[0][0].dimension
    merged = []
    n_components = 0
    total_volume = 0.0
    for spec, vol in parts:
        if vol <= 0:
            raise ValueError("part volumes must be positive")
        if spec.bc != bc:
            raise ValueError("cannot mix boundary conditions in a union")
        if spec.dimension != dim:
            raise ValueError("cannot mix dimensions in a union")
        if spec.count < k:
            raise ValueError(
                f"part spectra must carry at least {k} eigenvalues (got {spec.count})"
            )
        factor = _scale_factor(spec.volume, vol, dim)
        total = 0
        for m in spec.modes:
            if total >= k:
                break
            merged.append(Mode(m.label, m.value * factor, m.multiplicity))
            total += m.multiplicity
        n_components += spec.n_components
        total_volume += vol
    return _finalize(
        merged,
        k,
        bc,
        dim,
        None,
        n_components=n_components,
        volume=total_volume,
    )

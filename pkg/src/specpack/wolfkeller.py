"""Class-restricted extremal eigenvalue sequences over disjoint unions.

For a class of domains generated by unit-volume base shapes and closed under
scaled disjoint unions, the extremal n-th nonzero eigenvalue satisfies

    best[n]^(N/2) = opt( conn[n]^(N/2),
                         max/min over 1 <= j <= n/2 of best[j]^(N/2) + best[n-j]^(N/2) )

where conn[n] is the best connected candidate (the n-th nonzero eigenvalue of
a base shape) and N is the dimension.  Maximization is the Neumann problem;
the Dirichlet mirror minimizes with the same additive combination.

The recursion also yields the optimal packing: a split at n into (i, n-i)
gives the two sides volumes (best[i]/best[n])^(N/2) and
(best[n-i]/best[n])^(N/2), which telescope down to the Connected leaves.

Tie convention: when the connected candidate equals the best split (relative
1e-12), the stored provenance is Connected with the tie flag set; among
equal splits the smallest left index wins.
"""

import csv
import io
import math
from dataclasses import dataclass

from . import spectra
from .spectra import DomainShape, spectrum_of

REL_TIE_TOL = 1e-12
REL_SCAN_TOL = 1e-9


@dataclass(frozen=True)
class DomainClass:
    """Base shapes (same dimension and boundary condition) plus objective."""

    name: str
    base_shapes: tuple
    objective: str  # "maximize" | "minimize"

    def __post_init__(self):
        if self.objective not in ("maximize", "minimize"):
            raise ValueError(f"unknown objective {self.objective!r}")
        if not self.base_shapes:
            raise ValueError("a domain class needs at least one base shape")
        dims = {s.dimension for s in self.base_shapes}
        bcs = {s.bc for s in self.base_shapes}
        if len(dims) != 1 or len(bcs) != 1:
            raise ValueError("base shapes must share dimension and boundary condition")

    @property
    def dimension(self):
        return self.base_shapes[0].dimension

    @property
    def bc(self):
        return self.base_shapes[0].bc


def disks_class():
    return DomainClass("disks", (spectra.disk("neumann"),), "maximize")


def squares_class():
    return DomainClass("squares", (spectra.square("neumann"),), "maximize")


def balls_class():
    return DomainClass("balls", (spectra.ball(),), "maximize")


def cubes_class():
    return DomainClass("cubes", (spectra.cube("neumann"),), "maximize")


def dirichlet_disks_class():
    return DomainClass("dirichlet-disks", (spectra.disk("dirichlet"),), "minimize")


@dataclass(frozen=True)
class Connected:
    """Leaf: the index-th nonzero eigenvalue of one base shape."""

    shape: DomainShape
    index: int
    tie: bool = False


@dataclass(frozen=True)
class Split:
    """Union of the optimal packings for indices i and j = n - i."""

    i: int
    left: object
    right: object
    tie: bool = False


@dataclass(frozen=True)
class PackedComponent:
    shape: DomainShape
    volume: float
    support_index: int = None  # eigenvalue index this component realizes


@dataclass(frozen=True)
class PackedDomain:
    """Scaled canonical components with volumes summing to the total."""

    components: tuple

    @property
    def total_volume(self):
        return math.fsum(c.volume for c in self.components)


class ExtremalSequence:
    """best[n] for n = 1..K in one domain class, with provenance."""

    def __init__(self, domain_class, K, values, provenance, connected_values,
                 split_values, split_indices):
        self.domain_class = domain_class
        self.K = K
        self._values = values
        self._provenance = provenance
        self._connected = connected_values
        self._split_values = split_values
        self._split_indices = split_indices

    @property
    def dimension(self):
        return self.domain_class.dimension

    @property
    def objective(self):
        return self.domain_class.objective

    def _check_index(self, n):
        if not 1 <= n <= self.K:
            raise IndexError(f"index {n} outside computed range 1..{self.K}")

    def value(self, n):
        self._check_index(n)
        return self._values[n]

    def connected_value(self, n):
        self._check_index(n)
        return self._connected[n]

    def split_value(self, n):
        """Best pure-split value at n (None for n = 1)."""
        self._check_index(n)
        return self._split_values[n]

    def split_index(self, n):
        self._check_index(n)
        return self._split_indices[n]

    def decomposition(self, n):
        self._check_index(n)
        return self._provenance[n]

    def leaf_counts(self, n, tie_as_split=False):
        """Multiset of Connected leaf indices under the stored provenance.

        With tie_as_split=True, tie nodes unroll through their equal-value
        split instead (the packing the split side of the tie denotes).
        """
        self._check_index(n)
        counts = {}

        def walk(idx):
            dec = self._provenance[idx]
            if isinstance(dec, Connected):
                if dec.tie and tie_as_split:
                    i = self._split_indices[idx]
                    walk(i)
                    walk(idx - i)
                else:
                    counts[idx] = counts.get(idx, 0) + 1
            else:
                walk(dec.i)
                walk(idx - dec.i)

        walk(n)
        return counts

    def leaves(self, n):
        """Connected leaves (shape, index, count) of the stored provenance."""
        counts = self.leaf_counts(n)
        out = []
        for idx in sorted(counts, reverse=True):
            dec = self._provenance[idx]
            while isinstance(dec, Split):  # unreachable; leaves are Connected
                dec = dec.left
            out.append((dec.shape, idx, counts[idx]))
        return out

    def expression(self, n, ascii_form=False):
        """Provenance as `2*mu8+6*mu1` (ascii) or `2μ_8 + 6μ_1`.

        Split expressions unroll tie nodes through their split side (so a
        split over an index whose connected value merely ties a pure union
        reads as the union, e.g. `5μ_1` rather than `μ_4 + μ_1`); a tie at n
        itself renders both sides, e.g. `9μ_1 = μ_9`.
        """
        self._check_index(n)
        dec = self._provenance[n]
        if isinstance(dec, Connected) and not dec.tie:
            return _format_terms({n: 1}, ascii_form)
        if isinstance(dec, Connected) and dec.tie:
            split = _format_terms(self.leaf_counts(n, tie_as_split=True), ascii_form)
            conn = _format_terms({n: 1}, ascii_form)
            return f"{split}={conn}" if ascii_form else f"{split} = {conn}"
        return _format_terms(self.leaf_counts(n, tie_as_split=True), ascii_form)

    def to_csv(self):
        """CSV export: n,value,provenance (full precision)."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "value", "provenance"])
        for n in range(1, self.K + 1):
            writer.writerow([n, repr(self._values[n]), self.expression(n, ascii_form=True)])
        return buf.getvalue()


def _format_terms(counts, ascii_form):
    parts = []
    for idx in sorted(counts, reverse=True):
        c = counts[idx]
        if ascii_form:
            parts.append(f"{c}*mu{idx}" if c > 1 else f"mu{idx}")
        else:
            parts.append(f"{c}μ_{idx}" if c > 1 else f"μ_{idx}")
    return ("+" if ascii_form else " + ").join(parts)


def _power(value, dimension):
    if dimension == 2:
        return value
    return value * math.sqrt(value)  # value^(3/2)


def _unpower(s, dimension):
    if dimension == 2:
        return s
    return s ** (2.0 / 3.0)


def extremal_sequence(domain_class, K, base_values=None):
    """Run the recursion up to index K.

    ``base_values`` overrides the connected candidates (mapping shape ->
    ascending nonzero eigenvalues); by default they come from spectrum_of.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    N = domain_class.dimension
    maximize = domain_class.objective == "maximize"
    better = (lambda a, b: a > b) if maximize else (lambda a, b: a < b)

    if base_values is None:
        base_values = {
            shape: spectrum_of(shape, K).nonzero_values()
            for shape in domain_class.base_shapes
        }
    conn = [None] * (K + 1)
    conn_shape = [None] * (K + 1)
    for shape in domain_class.base_shapes:
        vals = base_values[shape]
        if len(vals) < K:
            raise ValueError(f"base spectrum for {shape.kind} shorter than K={K}")
        for n in range(1, K + 1):
            v = vals[n - 1]
            if conn[n] is None or better(v, conn[n]):
                conn[n] = v
                conn_shape[n] = shape

    values = [math.nan] * (K + 1)
    powers = [math.nan] * (K + 1)
    provenance = [None] * (K + 1)
    split_values = [None] * (K + 1)
    split_indices = [None] * (K + 1)

    values[1] = conn[1]
    powers[1] = _power(conn[1], N)
    provenance[1] = Connected(conn_shape[1], 1)

    for n in range(2, K + 1):
        best_s = None
        best_i = None
        for j in range(1, n // 2 + 1):
            s = powers[j] + powers[n - j]
            if best_s is None or better(s, best_s):
                best_s = s
                best_i = j
        split_v = _unpower(best_s, N)
        split_values[n] = split_v
        split_indices[n] = best_i
        cv = conn[n]
        tie = abs(cv - split_v) <= REL_TIE_TOL * max(abs(cv), abs(split_v))
        if tie:
            values[n] = max(cv, split_v) if maximize else min(cv, split_v)
            provenance[n] = Connected(conn_shape[n], n, tie=True)
        elif better(cv, split_v):
            values[n] = cv
            provenance[n] = Connected(conn_shape[n], n)
        else:
            values[n] = split_v
            provenance[n] = Split(best_i, provenance[best_i], provenance[n - best_i])
        powers[n] = _power(values[n], N)

    return ExtremalSequence(
        domain_class, K, values, provenance, conn, split_values, split_indices
    )


def unpack_geometry(seq, n):
    """Unroll the provenance at n into scaled components of total volume 1."""
    N = seq.dimension
    vn = seq.value(n)
    components = []
    for shape, idx, count in seq.leaves(n):
        ratio = seq.value(idx) / vn
        vol = ratio if N == 2 else ratio * math.sqrt(ratio)
        components.extend([PackedComponent(shape, vol, idx)] * count)
    components.sort(key=lambda c: (-c.volume, -c.support_index))
    return PackedDomain(tuple(components))


def connectedness_certificate(candidate_value, seq, n):
    """True iff candidate_value beats every split, so the class optimum at n
    must be connected.  Strictness at relative 1e-12."""
    if n < 2:
        return True
    if n - 1 > seq.K:
        raise IndexError(f"sequence must be complete to {n - 1}")
    N = seq.dimension
    maximize = seq.objective == "maximize"
    cp = _power(candidate_value, N)
    for i in range(1, n // 2 + 1):
        s = _power(seq.value(i), N) + _power(seq.value(n - i), N)
        margin = REL_TIE_TOL * max(abs(cp), abs(s))
        if maximize:
            if not cp - s > margin:
                return False
        else:
            if not s - cp > margin:
                return False
    return True


def crossover_scan(seq_a, seq_b, K):
    """Indices n <= K where seq_b strictly beats seq_a (relative 1e-9)."""
    if seq_a.dimension != seq_b.dimension:
        raise ValueError("sequences must share dimension")
    if seq_a.objective != seq_b.objective:
        raise ValueError("sequences must share objective")
    if seq_a.K < K or seq_b.K < K:
        raise ValueError(f"both sequences must reach K={K}")
    maximize = seq_a.objective == "maximize"
    out = []
    for n in range(1, K + 1):
        va = seq_a.value(n)
        vb = seq_b.value(n)
        gap = (vb - va) if maximize else (va - vb)
        if gap > REL_SCAN_TOL * max(abs(va), abs(vb)):
            out.append(n)
    return out


@dataclass(frozen=True)
class DirichletCheck:
    square_value: float
    disks_value: float
    disks_exceed_square: bool


def dirichlet_min_check(K=13):
    """Compare lambda_13 of the unit square against the minimizing sequence
    over disjoint unions of disks."""
    if K < 13:
        raise ValueError("K must be >= 13")
    square_13 = spectra.rectangle_spectrum(1.0, 1.0, "dirichlet", 13).nonzero(13)
    seq = extremal_sequence(dirichlet_disks_class(), K)
    disks_13 = seq.value(13)
    return DirichletCheck(square_13, disks_13, disks_13 > square_13), seq

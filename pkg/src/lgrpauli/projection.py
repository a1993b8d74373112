"""The projection onto principal-minor coordinates and its inverse.

Keeping only the 2^N Plucker coordinates indexed by principal minors gives
a point of PG(2^N - 1, 2).  On the chart where the empty minor is 1, the
subspace is the graph of a symmetric matrix A and the coordinates are the
principal minors of A; over GF(2) those determine A (and hence the whole
subspace) uniquely, so the projection is a bijection onto its image.

Coordinates are indexed internally by subsets I of {1..N} (element j at
bit j-1).  The display order used for bit strings and observables puts
the subsets without element 1 first, ascending by the value with element 1
most significant, followed by their complements in the same order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf2 import BinMat, minor
from .pauli import BITS_LETTER, Generator, PauliPoint
from .pluecker import PlueckerVec, SubsetIndex, embed, lagrangian_constraints


class NotInImageError(ValueError):
    """Raised when a point has no preimage among the generators."""


@lru_cache(maxsize=None)
def display_masks(n_qubits: int) -> tuple[int, ...]:
    """Internal subset masks in display order (length 2^N)."""
    n = n_qubits
    half = 1 << (n - 1)
    first = []
    for d in range(half):
        m = 0
        for j in range(2, n + 1):
            if (d >> (n - j)) & 1:
                m |= 1 << (j - 1)
        first.append(m)
    full = (1 << n) - 1
    return tuple(first + [full ^ m for m in first])


def principal_index(n_qubits: int, subset) -> SubsetIndex:
    """The Plucker index whose minor is the principal minor on I:
    ({1..N} minus I) together with {N+i : i in I}."""
    n = n_qubits
    if isinstance(subset, int):
        i_mask = subset
    else:
        i_mask = 0
        for j in subset:
            if not 1 <= j <= n:
                raise ValueError(f"subset element {j} out of range 1..{n}")
            i_mask |= 1 << (j - 1)
    full = (1 << n) - 1
    key = (full & ~i_mask) | (i_mask << n)
    return SubsetIndex.from_key(2 * n, key)


@dataclass(frozen=True, order=True)
class ProjPoint:
    """A nonzero point of PG(2^N - 1, 2) in principal-minor coordinates.

    ``bits`` packs the coordinate of subset-mask m at bit m.
    """

    n_source: int
    bits: int

    def __post_init__(self):
        if not 1 <= self.n_source:
            raise ValueError("source qubit count must be positive")
        if self.bits <= 0 or self.bits >> (1 << self.n_source):
            raise ValueError("point must be nonzero and within 2^N coordinates")

    def coord(self, subset) -> int:
        if isinstance(subset, int):
            m = subset
        else:
            m = sum(1 << (j - 1) for j in subset)
        return (self.bits >> m) & 1

    def display_bits(self) -> tuple[int, ...]:
        return tuple((self.bits >> m) & 1 for m in display_masks(self.n_source))

    @property
    def display_int(self) -> int:
        """Display-order coordinates packed with position k at bit k-1."""
        out = 0
        for k, m in enumerate(display_masks(self.n_source)):
            if (self.bits >> m) & 1:
                out |= 1 << k
        return out

    def display_str(self) -> str:
        return "[" + ":".join(str(b) for b in self.display_bits()) + "]"

    def bit_string(self) -> str:
        return "".join(str(b) for b in self.display_bits())

    def hex_string(self) -> str:
        width = (len(display_masks(self.n_source)) + 3) // 4
        value = int(self.bit_string(), 2)
        return format(value, f"0{width}x")

    @classmethod
    def from_display_bits(cls, bits) -> "ProjPoint":
        bits = tuple(int(b) for b in bits)
        size = len(bits)
        n = size.bit_length() - 1
        if 1 << n != size:
            raise ValueError("display length must be a power of two")
        packed = 0
        for b, m in zip(bits, display_masks(n)):
            if b & 1:
                packed |= 1 << m
        return cls(n, packed)

    @classmethod
    def from_string(cls, n_qubits: int, text: str) -> "ProjPoint":
        """Parse a display bit string ("0010"), colon form ("[0:0:1:0]") or
        hex ("0x4")."""
        text = text.strip()
        size = 1 << n_qubits
        if text.startswith("[") and text.endswith("]"):
            parts = text[1:-1].split(":")
            if len(parts) != size:
                raise ValueError(f"expected {size} coordinates")
            return cls.from_display_bits(int(p) for p in parts)
        if text.lower().startswith("0x"):
            value = int(text, 16)
            bitstr = format(value, f"0{size}b")
        else:
            bitstr = text
        if len(bitstr) != size or set(bitstr) - {"0", "1"}:
            raise ValueError(f"expected {size} binary digits or hex")
        return cls.from_display_bits(int(c) for c in bitstr)


def project(v: PlueckerVec) -> ProjPoint:
    """Keep the principal-minor coordinates of a Plucker vector.

    The input must satisfy the isotropy constraints; a resulting zero
    vector signals a point off the Lagrangian locus and is rejected.
    """
    n = v.n_qubits
    for c in lagrangian_constraints(n):
        if c.evaluate(v):
            raise ValueError(f"input violates isotropy constraint {c}")
    full = (1 << n) - 1
    bits = 0
    for m in range(1 << n):
        key = (full & ~m) | (m << n)
        if (v.table >> key) & 1:
            bits |= 1 << m
    if bits == 0:
        raise ValueError("all principal coordinates vanish: input not Lagrangian")
    return ProjPoint(n, bits)


def to_observable(p: ProjPoint) -> PauliPoint:
    """Read the display coordinates as a Pauli operator on 2^(N-1) qubits."""
    db = p.display_bits()
    m = len(db) // 2
    letters = "".join(BITS_LETTER[(db[k], db[k + m])] for k in range(m))
    return PauliPoint.from_label(letters)


@dataclass(frozen=True)
class ChartMatrix:
    """The symmetric matrix whose graph is a chart point's subspace."""

    n: int
    entries: BinMat

    def __post_init__(self):
        if self.entries.nrows != self.n or self.entries.cols != self.n:
            raise ValueError("chart matrix must be N x N")
        if self.entries != self.entries.transpose():
            raise ValueError("chart matrix must be symmetric")

    def principal_minor(self, subset) -> int:
        idx = sorted(subset)
        return minor(self.entries, idx, idx)


def chart_matrix(p: ProjPoint) -> ChartMatrix:
    """Reconstruct A from a chart point (empty-set coordinate = 1):
    a_ii from the singleton minors, a_ij = D_i D_j + D_ij."""
    n = p.n_source
    if not p.bits & 1:
        raise ValueError("not a chart point: empty-set coordinate is 0")
    rows = [0] * n
    for i in range(n):
        di = (p.bits >> (1 << i)) & 1
        if di:
            rows[i] |= 1 << i
        for j in range(i + 1, n):
            dj = (p.bits >> (1 << j)) & 1
            dij = (p.bits >> ((1 << i) | (1 << j))) & 1
            if (di & dj) ^ dij:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return ChartMatrix(n, BinMat(n, tuple(rows)))


def chart_generator(p: ProjPoint) -> Generator:
    """The generator spanned by u_i = e_i + sum_j a_ij e_{N+j}."""
    a = chart_matrix(p)
    n = p.n_source
    rows = tuple((1 << i) | (a.entries.rows[i] << n) for i in range(n))
    return Generator.from_basis(BinMat(2 * n, rows), n)


@lru_cache(maxsize=None)
def image(n_qubits: int) -> tuple[ProjPoint, ...]:
    """The projected images of all generators, sorted; has the same
    cardinality as the generator list (the projection is injective)."""
    from .pauli import enumerate_generators

    pts = {project(embed(g)) for g in enumerate_generators(n_qubits)}
    return tuple(sorted(pts))


@lru_cache(maxsize=None)
def _lift_table(n_qubits: int) -> dict[ProjPoint, Generator]:
    from .pauli import enumerate_generators

    table = {}
    for g in enumerate_generators(n_qubits):
        table[project(embed(g))] = g
    return table


def lift(p: ProjPoint) -> Generator:
    """The unique generator projecting to ``p``.

    Chart points are reconstructed from the symmetric matrix; off-chart
    points fall back to the precomputed enumeration table.
    """
    if p.bits & 1:
        g = chart_generator(p)
        if project(embed(g)) != p:
            raise NotInImageError(f"{p.display_str()} is not in the image")
        return g
    table = _lift_table(p.n_source)
    try:
        return table[p]
    except KeyError:
        raise NotInImageError(f"{p.display_str()} is not in the image") from None

"""O-sequences, generic h-vectors of point sets, Gorenstein symmetry
tests, h-vector linkage, and postulation characters.

Everything operates on short tuples of nonnegative integers; all checks
are exact.  The Gorenstein test in codimension 3 is the SI-sequence
criterion (symmetric, and the first difference of the first half is again
an O-sequence); in codimension 2 the same check specializes to the
complete-intersection trapezoids.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import CharacterError, LiaisonkitError, LinkageError

AMBIENT_CODIM = {"P2": 2, "P3": 3, "p2": 2, "p3": 3}


@dataclass(frozen=True)
class HVector:
    """Finite sequence of nonnegative integers starting with 1, trailing
    zeros trimmed; ``ambient_codim`` is the codimension of the points it
    describes (3 for P3, 2 for P2)."""

    entries: tuple[int, ...]
    ambient_codim: int = 3

    def __post_init__(self):
        entries = tuple(self.entries)
        while entries and entries[-1] == 0:
            entries = entries[:-1]
        if not entries or entries[0] != 1:
            raise LiaisonkitError(f"h-vector must start with 1, got {self.entries}")
        if any(not isinstance(x, int) or isinstance(x, bool) or x < 0 for x in entries):
            raise LiaisonkitError(f"h-vector entries must be nonnegative integers: {entries}")
        object.__setattr__(self, "entries", entries)

    @property
    def mass(self) -> int:
        return sum(self.entries)

    @property
    def socle_degree(self) -> int:
        return len(self.entries) - 1

    def get(self, i: int) -> int:
        return self.entries[i] if 0 <= i < len(self.entries) else 0

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries) + ")"


def macaulay_bound(a: int, i: int) -> int:
    """Maximal growth a^<i> of an O-sequence from value ``a`` in degree
    ``i >= 1`` (Macaulay binomial expansion bound)."""
    if i < 1:
        raise LiaisonkitError("macaulay_bound needs degree index >= 1")
    if a == 0:
        return 0
    out = 0
    rest, j = a, i
    while rest > 0:
        m = j
        while comb(m + 1, j) <= rest:
            m += 1
        out += comb(m + 1, j + 1)
        rest -= comb(m, j)
        j -= 1
    return out


def _growth_ok(seq) -> bool:
    for i in range(1, len(seq) - 1):
        if seq[i + 1] > macaulay_bound(seq[i], i):
            return False
    return True


def is_O_sequence(h) -> bool:
    """True iff h(i+1) <= h(i)^<i> for every i >= 1 (and h starts with 1).

    >>> is_O_sequence((1, 3, 6, 10))
    True
    >>> is_O_sequence((1, 0, 1))
    False
    """
    seq = tuple(h.entries if isinstance(h, HVector) else h)
    if not seq or seq[0] != 1 or any(x < 0 for x in seq):
        return False
    return _growth_ok(seq)


def generic_points_h_vector(
    n: int, ambient: str = "P3", surface_degree: int | None = None
) -> HVector:
    """Greedy-maximal h-vector of n general points in P2 or P3.

    With ``surface_degree = e`` (P3 only) the growth is additionally
    capped by the Hilbert function of a degree-e surface: general points
    constrained to lie on such a surface.

    >>> generic_points_h_vector(20).entries
    (1, 3, 6, 10)
    >>> generic_points_h_vector(18).entries
    (1, 3, 6, 8)
    """
    if n < 1:
        raise LiaisonkitError("need at least one point")
    if ambient not in AMBIENT_CODIM:
        raise LiaisonkitError(f"ambient must be P2 or P3, got {ambient!r}")
    r = AMBIENT_CODIM[ambient]
    if surface_degree is not None and r != 3:
        raise LiaisonkitError("surface constraint applies to P3 only")
    entries = []
    remaining = n
    i = 0
    section = 0
    while remaining > 0:
        cap = comb(i + r - 1, r - 1)
        if surface_degree is not None:
            section += min(i + 1, surface_degree)
            cap = min(cap, section)
        take = min(cap, remaining)
        entries.append(take)
        remaining -= take
        i += 1
    return HVector(tuple(entries), ambient_codim=r)


def growth_envelope(
    length: int, ambient: str = "P3", surface_degree: int | None = None
) -> tuple[int, ...]:
    """Pointwise caps on h-vector entries of point sets in the ambient
    space, optionally constrained to a degree-e surface (P3 only)."""
    r = AMBIENT_CODIM[ambient]
    caps = []
    section = 0
    for i in range(length):
        cap = comb(i + r - 1, r - 1)
        if surface_degree is not None:
            section += min(i + 1, surface_degree)
            cap = min(cap, section)
        caps.append(cap)
    return tuple(caps)


def is_gorenstein_h_vector(h: HVector) -> bool:
    """Symmetric with SI first half; codimension 2 or 3 only.

    >>> is_gorenstein_h_vector(HVector((1, 3, 3, 1)))
    True
    >>> is_gorenstein_h_vector(HVector((1, 3, 2)))
    False
    """
    if h.ambient_codim not in (2, 3):
        raise LiaisonkitError(f"unsupported codimension {h.ambient_codim}")
    seq = h.entries
    s = len(seq) - 1
    if any(seq[i] != seq[s - i] for i in range(s + 1)):
        return False
    if len(seq) > 1 and seq[1] > h.ambient_codim:
        return False
    half = seq[: s // 2 + 1]
    diff = [half[0]] + [half[i] - half[i - 1] for i in range(1, len(half))]
    if any(x < 0 for x in diff):
        return False
    return is_O_sequence(tuple(diff))


def link_h_vector(z: HVector, w: HVector) -> HVector:
    """Residual of ``z`` under a Gorenstein link through ``w``:
    res(i) = w(i) - z(s - i) with s the socle degree of w.

    Validates containment, nonnegativity and O-sequence growth of the
    residual; the failing index is reported.  Mass is conserved:
    sum(z) + sum(res) = sum(w).
    """
    if z.ambient_codim != w.ambient_codim:
        raise LinkageError("h-vectors live in different codimensions")
    if not is_gorenstein_h_vector(w):
        raise LinkageError(f"{w} is not a Gorenstein h-vector")
    s = w.socle_degree
    for i in range(max(len(z.entries), len(w.entries))):
        if z.get(i) > w.get(i):
            raise LinkageError(f"containment violated: z({i}) > w({i})", index=i)
    res = []
    for i in range(s + 1):
        v = w.get(i) - z.get(s - i)
        if v < 0:
            raise LinkageError(f"negative residual entry {v}", index=i)
        res.append(v)
    while res and res[-1] == 0:
        res.pop()
    if not res:
        raise LinkageError("residual is the empty configuration (z equals w)")
    if res[0] != 1 or not _growth_ok(res):
        raise LinkageError(f"residual {tuple(res)} is not a valid O-sequence", index=0)
    return HVector(tuple(res), ambient_codim=w.ambient_codim)


@dataclass(frozen=True)
class PostulationCharacter:
    """Integer sequence gamma(0), gamma(1), ... with sum 0 and weighted
    sum equal to the curve degree."""

    values: tuple[int, ...]
    degree: int

    def __post_init__(self):
        values = tuple(self.values)
        while values and values[-1] == 0:
            values = values[:-1]
        object.__setattr__(self, "values", values)
        if sum(values) != 0:
            raise CharacterError(f"character mass {sum(values)} != 0: {values}")
        if sum(i * v for i, v in enumerate(values)) != self.degree:
            raise CharacterError(
                f"weighted character sum != degree {self.degree}: {values}"
            )

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.values) + ")"


def postulation_character(hf) -> PostulationCharacter:
    """Character of a curve from the Hilbert function of its coordinate
    ring, listed from degree 0: gamma = -(third difference), with the
    function extended by zero in negative degrees.

    The input must reach the stable linear range (two equal consecutive
    first differences at the tail); otherwise a CharacterError is raised.

    >>> postulation_character([1, 2, 3, 4, 5]).values
    (-1, 1)
    """
    phi = list(hf)
    if len(phi) < 3:
        raise CharacterError("need at least three Hilbert function values")
    padded = [0, 0, 0] + phi
    d1 = [padded[i] - padded[i - 1] for i in range(1, len(padded))]
    d2 = [d1[i] - d1[i - 1] for i in range(1, len(d1))]
    d3 = [d2[i] - d2[i - 1] for i in range(1, len(d2))]
    if d1[-1] != d1[-2] or d2[-1] != 0:
        raise CharacterError("Hilbert function does not stabilize to linear growth")
    deg = d1[-1]
    if deg < 1:
        raise CharacterError("stable growth is constant: not a curve")
    gamma = [-x for x in d3]
    return PostulationCharacter(tuple(gamma), degree=deg)


def character_is_positive(gamma: PostulationCharacter) -> bool:
    """gamma(0) = -1 and, from the first nonnegative index s0 >= 1 on,
    every value is nonnegative."""
    v = gamma.values
    if not v or v[0] != -1:
        return False
    s0 = None
    for i in range(1, len(v)):
        if v[i] >= 0:
            s0 = i
            break
    if s0 is None:
        return True
    return all(x >= 0 for x in v[s0:])


def character_is_connected(gamma: PostulationCharacter) -> bool:
    """The set of indices with gamma > 0 is an interval."""
    pos = [i for i, x in enumerate(gamma.values) if x > 0]
    if not pos:
        return True
    return pos[-1] - pos[0] + 1 == len(pos)


def acm_character(h) -> PostulationCharacter:
    """Character of an ACM curve from its h-vector: gamma(n) = h(n-1) - h(n)."""
    seq = tuple(h.entries if isinstance(h, HVector) else h)
    values = []
    for n in range(len(seq) + 1):
        prev = seq[n - 1] if n - 1 >= 0 else 0
        cur = seq[n] if n < len(seq) else 0
        values.append(prev - cur)
    d = sum(seq)
    return PostulationCharacter(tuple(values), degree=d)


@lru_cache(maxsize=None)
def acm_h_vector_candidates(d: int, g: int, codim: int = 3) -> tuple[tuple[int, ...], ...]:
    """h-vectors (1, codim, h_2, ...) of integral ACM curves with the
    given degree (= mass) and genus (= sum over i >= 2 of (i-1) h_i),
    filtered to positive connected characters (strictly increasing, then
    a plateau, then strictly decreasing).

    Empty result means no integral nondegenerate ACM curve can have this
    (degree, genus) pair.
    """
    results = []

    def rec(seq, mass, genus_acc):
        if mass == d and genus_acc == g:
            gamma = acm_character(tuple(seq))
            if character_is_positive(gamma) and character_is_connected(gamma):
                results.append(tuple(seq))
        i = len(seq)
        hi_max = min(macaulay_bound(seq[-1], i - 1), d - mass)
        for hi in range(1, hi_max + 1):
            extra_g = (i - 1) * hi
            if genus_acc + extra_g > g:
                continue
            rec(seq + [hi], mass + hi, genus_acc + extra_g)

    if d >= 1 + codim:
        rec([1, codim], 1 + codim, 0)
    elif d == 1 and codim == 1:
        rec([1], 1, 0)
    return tuple(sorted(results))

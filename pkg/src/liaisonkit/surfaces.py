"""Surface catalog: named rational surfaces with exact enumeration of
line and conic classes.

The catalog ships as a JSON data file (see ``data/surfaces.json`` for the
schema) so new surfaces can be added without touching code.  The loader
recomputes every stored invariant (degree, sectional genus, canonical
class convention) and fails loudly on the first violation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import (
    CatalogError,
    UnknownSurfaceError,
    UnsupportedSurfaceError,
)
from .lattice import (
    BLOWNUP_PLANE,
    QUADRIC,
    DivisorClass,
    arithmetic_genus,
    degree,
    intersect,
    self_intersection,
)

FINITE = "finite"
ONE_PARAMETER = "one_parameter"


@dataclass(frozen=True)
class SurfaceModel:
    """A named lattice with hyperplane and canonical class.

    ``degree == H.H`` and ``sectional_genus == (H.H + H.K)/2 + 1`` are
    revalidated at load time.  ``family_dim`` is the dimension of the
    family of such surfaces in their ambient space; ``None`` where the
    catalog does not define one (the P3/P2 entries).
    """

    id: str
    ambient: str
    basis: str
    blown_points: int | None
    H: DivisorClass
    K: DivisorClass
    degree: int
    sectional_genus: int
    family_dim: int | None
    special_position_notes: tuple[str, ...]

    @property
    def zero(self) -> DivisorClass:
        return DivisorClass(self.basis, (0,) * len(self.H.coeffs))


@dataclass(frozen=True)
class LineClassSet:
    """All line classes on a surface with their family flags.

    A flag is ``finite`` for rigid lines (L^2 = -1) and ``one_parameter``
    for ruling families (L^2 = 0).
    """

    classes: tuple[DivisorClass, ...]
    family_flags: tuple[str, ...]

    def pairs(self):
        return tuple(zip(self.classes, self.family_flags))

    def __len__(self) -> int:
        return len(self.classes)


def _canonical_for(basis: str, rank: int) -> DivisorClass:
    if basis == QUADRIC:
        return DivisorClass.quadric((-2, -2))
    return DivisorClass.blownup((-3,) + (-1,) * (rank - 1))


def _parse_record(rec: dict) -> SurfaceModel:
    basis = rec["basis"]
    H = DivisorClass(basis, tuple(rec["H"]))
    K = DivisorClass(basis, tuple(rec["K"]))
    expected_K = _canonical_for(basis, len(H.coeffs))
    if K != expected_K:
        raise CatalogError(f"{rec['id']}: canonical class {K} != {expected_K}")
    if basis == BLOWNUP_PLANE:
        n = rec["blown_points"]
        if n != len(H.coeffs) - 1:
            raise CatalogError(
                f"{rec['id']}: blown_points {n} inconsistent with H length"
            )
    else:
        n = None
    model = SurfaceModel(
        id=rec["id"],
        ambient=rec["ambient"],
        basis=basis,
        blown_points=n,
        H=H,
        K=K,
        degree=rec["degree"],
        sectional_genus=rec["sectional_genus"],
        family_dim=rec.get("family_dim"),
        special_position_notes=tuple(rec.get("special_position_notes", ())),
    )
    deg = self_intersection(H)
    if deg != model.degree:
        raise CatalogError(f"{rec['id']}: stored degree {model.degree}, H.H = {deg}")
    sg = arithmetic_genus(H, model)
    if sg != model.sectional_genus:
        raise CatalogError(
            f"{rec['id']}: stored sectional genus {model.sectional_genus}, "
            f"recomputed {sg}"
        )
    if model.family_dim is None and model.ambient == "P4":
        raise CatalogError(f"{rec['id']}: P4 surfaces need a family dimension")
    return model


def _default_catalog_text() -> str:
    return resources.files("liaisonkit.data").joinpath("surfaces.json").read_text()


@lru_cache(maxsize=None)
def load_catalog(path: str | None = None) -> dict[str, SurfaceModel]:
    """Load and validate the surface catalog.

    ``path`` overrides the packaged data file.  The result is cached and
    immutable; concurrent reads are unrestricted.
    """
    if path is None:
        raw = json.loads(_default_catalog_text())
    else:
        raw = json.loads(Path(path).read_text())
    catalog: dict[str, SurfaceModel] = {}
    for rec in raw["surfaces"]:
        model = _parse_record(rec)
        if model.id in catalog:
            raise CatalogError(f"duplicate surface id {model.id!r}")
        catalog[model.id] = model
    return catalog


def get_surface(surface_id: str, catalog_path: str | None = None) -> SurfaceModel:
    catalog = load_catalog(catalog_path)
    if surface_id not in catalog:
        raise UnknownSurfaceError(surface_id, tuple(sorted(catalog)))
    return catalog[surface_id]


def surface_ids(catalog_path: str | None = None) -> tuple[str, ...]:
    return tuple(sorted(load_catalog(catalog_path)))


def surface_family_dim(surface: SurfaceModel) -> int:
    """Stored dimension of the family of such surfaces in P4.

    The catalog fills P4 blown-up-plane entries with 2n - 8 + 24 (point
    positions modulo plane automorphisms plus ambient coordinates) unless
    a record overrides it; P3/P2 entries have no defined value.
    """
    if surface.family_dim is None:
        raise UnsupportedSurfaceError(
            f"family dimension undefined for {surface.id} (ambient {surface.ambient})"
        )
    return surface.family_dim


# ---------------------------------------------------------------------------
# Bounded integer enumeration of classes with prescribed invariants.
#
# For a class L = (a; b_1..b_n) with L.H = d and L^2 >= c on a lattice with
# H = (h_0; h_1..h_n), h_0 > 0 and H^2 = h_0^2 - sum(h_i^2) > 0:
#
#   a*h_0 - d = sum(b_i h_i) <= |b| |h|        (Cauchy-Schwarz)
#   |b|^2 = a^2 - L^2 <= a^2 - c, so |b| <= |a| + sqrt(-c) for c <= 0,
#
# hence |a| (h_0 - |h|) <= |d| + |h| sqrt(-c) with h_0 - |h| > 0.  This
# yields a finite, provably sufficient bound on a; the b_i are then bounded
# by the square budget a^2 - c.
# ---------------------------------------------------------------------------


def _a_bound(surface: SurfaceModel, d: int, min_self: int) -> int:
    h0 = surface.H.coeffs[0]
    hsq = sum(x * x for x in surface.H.coeffs[1:])
    hnorm = math.sqrt(hsq)
    slack = math.sqrt(max(-min_self, 0))
    bound = (abs(d) + hnorm * slack) / (h0 - hnorm)
    return int(math.ceil(bound)) + 1


def _b_solutions(weights, wsum, psum, sq_lo, sq_hi):
    """All integer tuples b with sum(b_i w_i) = wsum, optional sum(b_i) =
    psum, and sq_lo <= sum(b_i^2) <= sq_hi.  Depth-first with exact
    Cauchy-Schwarz pruning on both running constraints."""
    n = len(weights)
    if sq_hi < 0:
        return []
    suffix_wsq = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_wsq[i] = suffix_wsq[i + 1] + weights[i] * weights[i]

    out = []

    def rec(i, rem_w, rem_p, budget, acc):
        if i == n:
            if rem_w == 0 and (psum is None or rem_p == 0):
                used = sq_hi - budget
                if used >= sq_lo:
                    out.append(tuple(acc))
            return
        k = n - i
        if rem_w * rem_w > budget * suffix_wsq[i]:
            return
        if psum is not None and rem_p * rem_p > budget * k:
            return
        top = math.isqrt(budget)
        for b in range(-top, top + 1):
            acc.append(b)
            rec(i + 1, rem_w - b * weights[i], rem_p - b, budget - b * b, acc)
            acc.pop()

    rec(0, wsum, 0 if psum is None else psum, sq_hi, [])
    return sorted(out)


def enumerate_classes(
    surface: SurfaceModel,
    deg: int,
    genus: int | None = None,
    self_ints=None,
    min_self: int | None = None,
) -> list[DivisorClass]:
    """All classes on ``surface`` with degree ``deg``, optionally pinned
    arithmetic genus and/or self-intersection values.

    ``self_ints`` is an iterable of admitted values of C^2; when omitted,
    C^2 ranges over [min_self .. Hodge bound d^2 // H^2].  Output order is
    canonical (sorted coefficient tuples).
    """
    if surface.basis == QUADRIC:
        found = []
        for a in range(0, deg + 1):
            b = deg - a
            c = DivisorClass.quadric((a, b))
            if genus is not None and arithmetic_genus(c, surface) != genus:
                continue
            q = self_intersection(c)
            if self_ints is not None and q not in set(self_ints):
                continue
            if self_ints is None and q < (min_self if min_self is not None else 0):
                continue
            found.append(c)
        return sorted(found, key=lambda c: c.coeffs)

    hodge_cap = (deg * deg) // surface.degree
    if self_ints is None:
        lo = min_self if min_self is not None else 0
        q_values = range(lo, hodge_cap + 1)
        floor_self = lo
    else:
        q_values = sorted(set(self_ints))
        if not q_values:
            return []
        floor_self = q_values[0]

    h = surface.H.coeffs
    found = []
    q_list = [q for q in q_values if q <= hodge_cap]
    if not q_list:
        return []
    qset = set(q_list)
    a_max = _a_bound(surface, deg, min(min(q_list), 0))
    for a in range(-a_max, a_max + 1):
        wsum = a * h[0] - deg
        if genus is not None:
            for q in q_list:
                sq = a * a - q
                if sq < 0:
                    continue
                # L.K = 2g - 2 - q with K = (-3; -1..-1) pins sum(b_i).
                psum = 3 * a + (2 * genus - 2 - q)
                for b in _b_solutions(h[1:], wsum, psum, sq, sq):
                    found.append(DivisorClass.blownup((a,) + b))
        else:
            # one sweep over the whole square-budget window
            sq_lo = max(a * a - max(q_list), 0)
            sq_hi = a * a - min(q_list)
            for b in _b_solutions(h[1:], wsum, None, sq_lo, sq_hi):
                c = DivisorClass.blownup((a,) + b)
                if self_intersection(c) in qset:
                    found.append(c)
    if genus is not None:
        found = [c for c in found if arithmetic_genus(c, surface) == genus]
    return sorted(set(found), key=lambda c: c.coeffs)


@lru_cache(maxsize=None)
def lines_on(surface: SurfaceModel) -> LineClassSet:
    """Exhaustive set of line classes: L.H = 1, genus 0, L^2 in {-1, 0}.

    Only blown-up-plane lattices carry the enumeration; the search bound
    is the signature inequality documented above.

    >>> scroll = get_surface("cubic_scroll")
    >>> [str(c) for c in lines_on(scroll).classes]
    ['(0;-1)', '(1;1)']
    """
    if surface.basis != BLOWNUP_PLANE:
        raise UnsupportedSurfaceError(
            f"line enumeration needs a blownup_plane lattice, got {surface.basis}"
        )
    classes = enumerate_classes(surface, 1, genus=0, self_ints=(-1, 0))
    flags = tuple(
        FINITE if self_intersection(c) == -1 else ONE_PARAMETER for c in classes
    )
    return LineClassSet(tuple(classes), flags)


@lru_cache(maxsize=None)
def conic_classes(surface: SurfaceModel) -> tuple[DivisorClass, ...]:
    """Plane-spanning conic candidates: C.H = 2, genus 0, C^2 >= 0."""
    found = enumerate_classes(surface, 2, genus=0, min_self=0)
    return tuple(found)


def is_effective_candidate(surface: SurfaceModel, c: DivisorClass) -> bool:
    """Cheap necessary screen for effectivity of a moving class: positive
    degree and nonnegative intersection with every enumerated line class.

    Classes with a fixed negative component (the lines themselves) fail;
    the screen targets the intermediate classes of chain searches.
    """
    if degree(c, surface) < 1:
        return False
    if surface.basis != BLOWNUP_PLANE:
        return True
    return all(intersect(c, line) >= 0 for line in lines_on(surface).classes)

"""Liaison moves and chain search: worked examples, the dual-route checks
(update formula vs adjunction; h-vector linkage vs the degree/genus
formulas), involutions, and search determinism."""

import random

import pytest

from liaisonkit.curves import CurveRecord, RaoTag
from liaisonkit.errors import LiaisonkitError, LinkageError, MissingWitnessError
from liaisonkit.hvectors import HVector, link_h_vector
from liaisonkit.lattice import DivisorClass, arithmetic_genus, degree, intersect
from liaisonkit.liaison import (
    REWITNESS_TABLE,
    Chain,
    SearchFailure,
    ascending_chain_search,
    biliaison_genus_formula,
    ci_link_p3,
    elementary_biliaison,
    family_dimension,
    g_link_on_surface,
    hilbert_dim_lower_bound,
    validate_rewitness_table,
)
from liaisonkit.surfaces import get_surface, load_catalog

B = DivisorClass.blownup
SCROLL = get_surface("cubic_scroll")
DP = get_surface("del_pezzo_4")
BORDIGA = get_surface("bordiga_6")

P4_SURFACES = [
    s for s in load_catalog().values() if s.ambient == "P4" and s.basis == "blownup_plane"
]


def test_biliaison_examples():
    l1 = CurveRecord.on_surface(SCROLL, B((0, -1)), rao=RaoTag.zero())
    c1 = elementary_biliaison(l1, 3)
    assert c1.witness.cls == B((6, 2)) and c1.dg == (10, 9)
    rec = CurveRecord.on_surface(DP, B((5, 3, 1, 1, 1, 1)))
    assert elementary_biliaison(rec, 0).witness.cls == rec.witness.cls
    skew = CurveRecord.on_surface(SCROLL, B((2, 2)), rao=RaoTag.simple_k(0))
    up = elementary_biliaison(skew, 1)
    assert up.witness.cls == B((4, 3)) and up.dg == (5, 0) and up.rao.shift == 1


def test_biliaison_requires_witness():
    with pytest.raises(MissingWitnessError):
        elementary_biliaison(CurveRecord.abstract(2, -1), 1)


def test_biliaison_formula_vs_adjunction_1000_trials():
    rng = random.Random(42)
    for _ in range(1000):
        surface = rng.choice(P4_SURFACES)
        cls = B(tuple(rng.randint(-12, 12) for _ in range(surface.blown_points + 1)))
        h = rng.randint(-4, 4)
        rec = CurveRecord.on_surface(surface, cls)
        result = elementary_biliaison(rec, h)
        # dual route: the closed-form update must agree with adjunction
        assert result.genus == biliaison_genus_formula(rec, h)
        assert result.degree == rec.degree + h * surface.degree
        assert result.witness.cls == cls + h * surface.H


def test_g_link_degree_additivity():
    rng = random.Random(43)
    checked = 0
    while checked < 300:
        surface = rng.choice(P4_SURFACES)
        cls = B(tuple(rng.randint(-6, 6) for _ in range(surface.blown_points + 1)))
        rec = CurveRecord.on_surface(surface, cls)
        if rec.degree < 1:
            continue
        m = _min_twist(rec.degree, surface) + rng.randint(0, 3)
        linked = g_link_on_surface(rec, m)
        ag = m * surface.H - surface.K
        assert rec.degree + linked.degree == degree(ag, surface)
        checked += 1


def test_g_link_worked_example():
    e1 = CurveRecord.on_surface(DP, B((0, -1, 0, 0, 0, 0)), rao=RaoTag.zero())
    linked = g_link_on_surface(e1, 1)
    assert linked.witness.cls == B((6, 3, 2, 2, 2, 2))
    assert e1.degree + linked.degree == 8  # deg(2H) on the quartic surface
    assert linked.degree == 7


def _min_twist(record_degree, surface):
    """Smallest m for which the residual of a degree-d curve under the
    divisor m*H - K still has positive degree."""
    kh = intersect(surface.K, surface.H)
    m = 0
    while m * surface.degree - kh - record_degree < 1:
        m += 1
    return m


def test_g_link_involution_and_composition():
    rng = random.Random(44)
    checked = 0
    while checked < 300:
        surface = rng.choice(P4_SURFACES)
        cls = B(tuple(rng.randint(-5, 5) for _ in range(surface.blown_points + 1)))
        rec = CurveRecord.on_surface(surface, cls, rao=RaoTag.simple_k(rng.randint(-3, 3)))
        if rec.degree < 1:
            continue
        m1 = _min_twist(rec.degree, surface) + rng.randint(0, 2)
        once = g_link_on_surface(rec, m1)
        twice = g_link_on_surface(once, m1)
        assert twice.witness.cls == rec.witness.cls  # involution at class level
        assert twice.rao == rec.rao  # un-dualized, shift restored
        # two links compose to a biliaison of height m2 - m1
        m2 = _min_twist(once.degree, surface) + rng.randint(0, 2)
        two_step = g_link_on_surface(once, m2)
        bil = elementary_biliaison(rec, m2 - m1)
        assert two_step.witness.cls == bil.witness.cls
        assert two_step.dg == bil.dg
        assert two_step.rao == bil.rao
        checked += 1


def test_g_link_rejects_empty_residual():
    h_rec = CurveRecord.on_surface(DP, DP.H)
    with pytest.raises(LinkageError):
        g_link_on_surface(h_rec, 0)  # D = -K = H: residual is empty


def test_ci_link_examples_with_h_vector_oracle():
    twisted = CurveRecord.abstract(3, 0, rao=RaoTag.zero())
    res = ci_link_p3(twisted, 2, 2)
    assert res.dg == (1, 0)
    # oracle: the same numbers via Hilbert-function linkage of the
    # Artinian reductions, (1,2) inside the CI h-vector (1,2,1)
    z = HVector((1, 2), ambient_codim=2)
    w = HVector((1, 2, 1), ambient_codim=2)
    residual = link_h_vector(z, w)
    d_oracle = residual.mass
    g_oracle = sum((i - 1) * v for i, v in enumerate(residual.entries) if i >= 2)
    assert res.dg == (d_oracle, g_oracle)

    skew = CurveRecord.abstract(2, -1, rao=RaoTag.simple_k(0))
    assert ci_link_p3(skew, 2, 2).dg == (2, -1)  # self-linked type
    assert ci_link_p3(CurveRecord.abstract(5, 2), 2, 3).dg == (1, 0)
    assert (2 + 3 - 4) * ((2 * 3 - 5) - 5) % 2 == 0  # parity cross-check


def test_ci_link_involution():
    rng = random.Random(45)
    for _ in range(300):
        d = rng.randint(1, 8)
        g = rng.randint(-2, 6)
        f1, f2 = rng.randint(2, 6), rng.randint(2, 6)
        if f1 * f2 <= d:
            continue
        rec = CurveRecord.abstract(d, g, rao=RaoTag.simple_k(rng.randint(-2, 2)))
        there = ci_link_p3(rec, f1, f2)
        back = ci_link_p3(there, f1, f2)
        assert back.dg == rec.dg
        assert back.rao == rec.rao


def test_ci_link_errors():
    with pytest.raises(LinkageError):
        ci_link_p3(CurveRecord.abstract(9, 1), 2, 2)  # d' < 0
    with pytest.raises(LinkageError):
        ci_link_p3(CurveRecord.abstract(4, 1), 2, 2)  # empty residual
    witnessed = CurveRecord.on_surface(DP, DP.H)
    with pytest.raises(LinkageError):
        ci_link_p3(witnessed, 2, 2)  # lives in P4


def test_family_dimension_values():
    assert family_dimension(DP, B((5, 3, 1, 1, 1, 1))) == 36
    assert family_dimension(SCROLL, B((6, 2))) == 42
    e10 = B((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1))
    assert family_dimension(BORDIGA, e10) == 36 + 0


def test_hilbert_dim_lower_bound():
    assert hilbert_dim_lower_bound(20, 26) == 75
    # oracle: lines in P4 = points of the Grassmannian G(1,4), dim 2*(5-2)
    assert hilbert_dim_lower_bound(1, 0) == 6 == 2 * (5 - 2)
    assert hilbert_dim_lower_bound(8, 3) == 38


def test_rewitness_table_validates():
    validate_rewitness_table()
    for dg, entries in REWITNESS_TABLE.items():
        for sid, coeffs in entries:
            s = get_surface(sid)
            c = B(coeffs)
            assert (degree(c, s), arithmetic_genus(c, s)) == dg


def test_search_finds_scroll_chain():
    chain = ascending_chain_search((10, 9), surfaces=["cubic_scroll"])
    assert isinstance(chain, Chain)
    assert chain.liaison_steps == 1
    assert chain.end.witness.cls == B((6, 2))
    assert chain.net_rao_shift == 3


def test_search_trivial_target():
    chain = ascending_chain_search((1, 0), surfaces=["cubic_scroll"])
    assert isinstance(chain, Chain) and chain.liaison_steps == 0


def test_search_two_step_with_rewitness():
    start = CurveRecord.on_surface(SCROLL, B((2, 2)), rao=RaoTag.simple_k(0))
    chain = ascending_chain_search(
        (11, 7), surfaces=["cubic_scroll", "bordiga_6"], starts=[start]
    )
    assert isinstance(chain, Chain)
    assert chain.liaison_steps == 2
    assert chain.steps[0].after.dg == (5, 0)
    assert chain.end.dg == (11, 7)
    assert chain.end.rao == RaoTag.simple_k(2)


def test_search_class_target():
    chain = ascending_chain_search(("cubic_scroll", B((7, 4))), surfaces=["cubic_scroll"])
    assert isinstance(chain, Chain)
    assert chain.end.witness.cls == B((7, 4))


def test_search_failure_is_a_value():
    result = ascending_chain_search((2, -1), surfaces=["cubic_scroll"], max_steps=3)
    assert isinstance(result, SearchFailure)
    assert result.explored >= 0
    assert result.bounds["max_steps"] == 3
    assert not result.found


def test_search_rejects_bad_input():
    with pytest.raises(LiaisonkitError):
        ascending_chain_search((10, 9), surfaces=[])
    with pytest.raises(LiaisonkitError):
        ascending_chain_search((10, 9), max_steps=0)
    with pytest.raises(MissingWitnessError):
        ascending_chain_search((5, 0), starts=[CurveRecord.abstract(2, -1)])


def test_search_determinism_across_worker_counts():
    targets = [(10, 9), (10, 6), (8, 5)]
    for target in targets:
        baseline = ascending_chain_search(target, max_steps=5, workers=1)
        for workers in (2, 3, 4, 7):
            again = ascending_chain_search(target, max_steps=5, workers=workers)
            assert type(again) is type(baseline)
            if isinstance(baseline, Chain):
                assert again == baseline


def test_chain_shift_telescopes():
    start = CurveRecord.on_surface(SCROLL, B((2, 2)), rao=RaoTag.simple_k(0))
    chain = ascending_chain_search(
        (11, 7), surfaces=["cubic_scroll", "bordiga_6"], starts=[start]
    )
    assert chain.end.rao.shift == start.rao.shift + chain.net_rao_shift


def test_chain_rejects_inconsistent_records():
    l1 = CurveRecord.on_surface(SCROLL, B((0, -1)), rao=RaoTag.zero())
    c1 = elementary_biliaison(l1, 3)
    step = ascending_chain_search((10, 9), surfaces=["cubic_scroll"]).steps[0]
    other = CurveRecord.on_surface(SCROLL, B((1, 1)), rao=RaoTag.zero())
    from liaisonkit.liaison import ChainStep

    bogus = ChainStep("biliaison", before=other, after=c1, surface_id="cubic_scroll", h=3)
    with pytest.raises(LiaisonkitError):
        Chain((step, bogus))
    with pytest.raises(LiaisonkitError):
        Chain((ChainStep("g_link", before=l1, after=c1, surface_id="cubic_scroll", m=1),))


def test_descending_search_mode():
    # descending step recovers a smaller curve from a bigger one
    start = CurveRecord.on_surface(SCROLL, B((6, 2)), rao=RaoTag.zero())
    result = ascending_chain_search(
        (7, 3),
        surfaces=["cubic_scroll"],
        ascending_only=False,
        starts=[start],
        max_steps=2,
    )
    assert isinstance(result, Chain)
    assert result.end.dg == (7, 3)
    assert not result.ascending_only

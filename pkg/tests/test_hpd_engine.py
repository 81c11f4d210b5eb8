import dataclasses
from math import comb

import pytest

from hpdcalc.bott import omega_cohomology
from hpdcalc.chern import chi_hypersurface
from hpdcalc.hpd_engine import (
    BLOWUP_INSTANCES,
    BUNDLE_INSTANCES,
    CATALOG,
    SODReport,
    build_lefschetz,
    duality_check,
    example_catalog,
    generation_schedule,
    guff_support,
    hpd1_decomposition,
    hpd2_decomposition,
    hpd_category_rank,
    mutation_walkthrough,
    orlov_checks,
    validate_lefschetz,
)

from conftest import series_coefficients, sympy_chi


def baselocus_chi_oracle(m, d, ell):
    """chi of ell degree-d hypersurfaces in P^m from the binomial series."""
    top = m - ell
    return d**ell * series_coefficients([(1, m + 1), (d, -ell)], top)[top]


def universal_chi_oracle(m, d, ell):
    return sympy_chi([m, ell - 1], [(d, 1)])


def rectangular_sweep():
    for d in range(1, 4):
        for m in range(1, 7):
            if (m + 1) % d == 0:
                for ell in range(2, m + 1):
                    yield m, d, ell


# -- Lefschetz data ----------------------------------------------------------

def test_build_lefschetz_examples():
    ld = build_lefschetz(5, 3, True)
    assert (ld.i, ld.block, ld.rectangular) == (2, (0, 1, 2), True)
    ld = build_lefschetz(2, 1, True)
    assert (ld.i, ld.block) == (3, (0,))
    ld = build_lefschetz(4, 3, False)
    assert (ld.i, len(ld.block), ld.last_block_size, ld.rectangular) == (2, 3, 2, False)
    assert ld.twists() == [0, 1, 2, 3, 4]


def test_build_lefschetz_rejects():
    with pytest.raises(ValueError):
        build_lefschetz(4, 3, True)
    with pytest.raises(ValueError):
        build_lefschetz(-1, 1)
    with pytest.raises(ValueError):
        build_lefschetz(3, 0)


def test_validate_lefschetz():
    ld = build_lefschetz(5, 3)
    assert ld.twists() == list(range(6))
    assert validate_lefschetz(ld)
    assert validate_lefschetz(build_lefschetz(3, 2))
    assert validate_lefschetz(build_lefschetz(4, 3, False))


def test_reversed_block_fails():
    ld = dataclasses.replace(build_lefschetz(3, 2), block=(1, 0))
    rep = validate_lefschetz(ld)
    assert not rep
    assert rep.exceptional.first.pair == (1, 2)
    assert rep.exceptional.first.layer == "numerical"


# -- HPD I -------------------------------------------------------------------

@pytest.mark.parametrize(
    "args,ranks,chi",
    [((2, 1, 2), [1, 3], 4), ((5, 3, 2), [-144, 6], -138), ((3, 2, 2), [0, 4], 4)],
)
def test_hpd1_examples(args, ranks, chi):
    rep = hpd1_decomposition(*args)
    assert [b.rank for b in rep.blocks] == ranks
    cert = rep.certificate("chi_identity")
    assert cert.lhs == cert.rhs == chi
    assert rep.all_passed
    assert [b.label for b in rep.blocks] == ["BASE_LOCUS"] + ["AMBIENT_TWIST"] * (args[2] - 1)


def test_hpd1_sweep_against_oracles():
    n = 0
    for m, d, ell in rectangular_sweep():
        rep = hpd1_decomposition(m, d, ell)
        assert rep.all_passed, (m, d, ell)
        assert rep.blocks[0].rank == baselocus_chi_oracle(m, d, ell)
        assert rep.total_rank == universal_chi_oracle(m, d, ell)
        n += 1
    assert n >= 15


def test_hpd1_certificates_cover_window():
    rep = hpd1_decomposition(6, 1, 5)
    names = {c.name for c in rep.certificates}
    for r in range(1, 5):
        assert f"acyclic_omega[r={r}]" in names
        assert omega_cohomology(4, r, r) == {}
        assert f"fiber_vanishing[k={r}]" in names
    assert any(name.startswith("pushforward_vanishing") for name in names)


def test_hpd1_rejects_range():
    for args in [(2, 1, 5), (3, 1, 1), (3, 0, 2)]:
        with pytest.raises(ValueError):
            hpd1_decomposition(*args)


# -- HPD II ------------------------------------------------------------------

def test_hpd2_equivalence_case():
    rep = hpd2_decomposition(5, 3, 2)
    assert rep.case_tag == "HPD2_EQ"
    assert rep.block_of("HPD_CATEGORY").rank == -144
    assert rep.case_blocks[0].label == "BASE_LOCUS" and rep.case_blocks[0].rank == -144
    assert rep.all_passed


def test_hpd2_cubic_fourfold():
    rep = hpd2_decomposition(5, 3, 1)
    assert rep.case_tag == "HPD2_LT"
    assert [(b.label, b.alpha, b.rank) for b in rep.blocks] == [
        ("HPD_CATEGORY", None, 24), ("LEFSCHETZ_BLOCK", 1, 3)
    ]
    assert rep.certificate("case_identity").lhs == 27
    assert chi_hypersurface([3], 4) == 24


def test_hpd2_quadric_surface():
    rep = hpd2_decomposition(3, 2, 1)
    assert rep.block_of("HPD_CATEGORY").rank == 2
    assert rep.certificate("case_identity").lhs == 4


def test_hpd2_greater_case():
    rep = hpd2_decomposition(5, 3, 4)
    assert rep.case_tag == "HPD2_GT"
    base = baselocus_chi_oracle(5, 3, 4)
    assert rep.block_of("HPD_CATEGORY").rank == base + 2 * 3
    assert [(b.alpha, b.beta) for b in rep.case_blocks[1:]] == [(0, 1), (0, 2)]
    assert rep.all_passed


def test_hpd2_alt_form_for_small_ell():
    rep = hpd2_decomposition(5, 1, 2)
    assert rep.case_tag == "HPD2_LT"
    assert [b.alpha for b in rep.alt_blocks[1:]] == [2, 3, 4, 5]
    assert [b.alpha for b in rep.case_blocks[1:]] == [1, 2, 3, 4]
    assert rep.all_passed


def test_hpd2_internal_consistency_sweep():
    for m, d, ell in rectangular_sweep():
        i = (m + 1) // d
        rep = hpd2_decomposition(m, d, ell)
        assert rep.all_passed, (m, d, ell)
        rank_C = universal_chi_oracle(m, d, ell) - (i - 1) * ell * d
        base = baselocus_chi_oracle(m, d, ell)
        assert rep.block_of("HPD_CATEGORY").rank == rank_C == hpd_category_rank(m, d, ell)
        if ell > i:
            assert rank_C == base + (ell - i) * d
        elif ell == i:
            assert rank_C == base
        else:
            assert base == rank_C + (i - ell) * d
        assert rep.total_rank == universal_chi_oracle(m, d, ell)


@pytest.mark.parametrize("m,d", [(1, 1), (3, 1), (3, 2), (5, 2), (5, 3), (5, 1), (7, 4)])
def test_ell_one_is_hyperplane_form(m, d):
    rep = hpd2_decomposition(m, d, 1)
    i = (m + 1) // d
    assert [b.label for b in rep.blocks] == ["HPD_CATEGORY"] + ["LEFSCHETZ_BLOCK"] * (i - 1)
    assert [(b.alpha, b.beta) for b in rep.blocks[1:]] == [(a, 0) for a in range(1, i)]
    assert rep.total_rank == chi_hypersurface([m], d)
    assert any(a.startswith("hyperplane form") for a in rep.annotations)


def test_hpd2_rejects():
    with pytest.raises(ValueError):
        hpd2_decomposition(4, 3, 1)
    with pytest.raises(ValueError):
        hpd2_decomposition(5, 3, 6)


def test_calabi_yau_annotation():
    assert any("K_X = O_X(-2)" in a for a in hpd2_decomposition(5, 3, 2).annotations)


# -- duality -----------------------------------------------------------------

@pytest.mark.parametrize("m,d", [(1, 1), (2, 1), (3, 2), (5, 2), (5, 3), (3, 1)])
def test_duality_rank(m, d):
    rep = duality_check(m, d)
    i = (m + 1) // d
    ell = comb(m + d, d)
    assert rep.inputs["ell"] == ell
    assert rep.block_of("HPD_CATEGORY").rank == (ell - i) * d
    assert rep.all_passed


def test_duality_needs_empty_baselocus():
    with pytest.raises(ValueError):
        duality_check(5, 3, 4)


# -- mutation grids ----------------------------------------------------------

def test_walkthrough_examples():
    w = mutation_walkthrough(1, 1)
    assert w.script == () and w.support == frozenset()
    w = mutation_walkthrough(2, 2)
    assert [s.mutated_past for s in w.script] == [((1, 0),)]
    assert w.support == {(1, 0)}
    w = mutation_walkthrough(3, 3)
    assert [s.mutated_past for s in w.script] == [((2, 0),), ((1, 0), (1, -1))]
    assert w.support == {(1, 0), (2, 0), (1, -1)}


def test_walkthrough_sweep():
    for i in range(1, 7):
        for ell in range(i, 9):
            w = mutation_walkthrough(i, ell)
            assert w.support == guff_support(i) == w.expected_support()
            assert w.conserves_grid()
            assert w.all_passed, (i, ell, [c for c in w.certificates.values() if not c.passed])
            for step in w.script:
                assert len(step.certificate_ids) == len(step.skipped)
                assert all(w.certificates[c].passed for c in step.certificate_ids)


def test_walkthrough_rejects_short_ell():
    with pytest.raises(ValueError):
        mutation_walkthrough(3, 2)


def test_schedule_formula():
    s = generation_schedule(2, 4, 3)
    assert s.boxes == [(2, 0)]
    assert s.entries[0].detector == (1, 3)
    assert s.all_passed
    s = generation_schedule(2, 3, 2)
    assert s.boxes == [(2, 0)]


def test_schedule_order():
    s = generation_schedule(3, 6, 4)
    expected = [(a, b) for b in range(-1, 1) for a in range(3, 3 + b - 1, -1)]
    assert s.boxes == expected == [(3, -1), (2, -1), (3, 0)]
    assert [e.detector for e in s.entries] == [(a - 1, b + 5) for a, b in expected]
    assert s.all_passed


def test_schedule_sweep():
    for i in range(1, 5):
        for ell in range(i + 1, 7):
            for k in range(ell - i + 1, ell):
                assert generation_schedule(i, ell, k).all_passed, (i, ell, k)


def test_schedule_rejects():
    with pytest.raises(ValueError):
        generation_schedule(2, 4, 1)
    with pytest.raises(ValueError):
        generation_schedule(2, 4, 4)
    with pytest.raises(ValueError):
        generation_schedule(3, 3, 2)


# -- Orlov -------------------------------------------------------------------

def test_orlov_examples():
    rep = orlov_checks("PROJECTIVE_BUNDLE", chi_base=2, n=2)
    assert rep.certificate("bundle_rank").lhs == 4 and rep.all_passed
    rep = orlov_checks("BLOWUP", "bl_line_P3")
    assert rep.certificate("blowup_identity").lhs == 6 == chi_hypersurface([3, 1], (1, 1))
    rep = orlov_checks("BLOWUP", "bl_point_P2")
    assert rep.certificate("blowup_identity").lhs == 4
    assert rep.case_tag == "ORLOV_BLOWUP"


@pytest.mark.parametrize("name", sorted(BLOWUP_INSTANCES))
def test_orlov_blowup_instances(name):
    m, d = BLOWUP_INSTANCES[name]
    rep = orlov_checks("BLOWUP", name)
    assert rep.all_passed
    assert rep.total_rank == universal_chi_oracle(m, d, 2)


@pytest.mark.parametrize("name", sorted(BUNDLE_INSTANCES))
def test_orlov_bundle_instances(name):
    assert orlov_checks("projective_bundle", name).all_passed


def test_orlov_mismatch_fails_certificate():
    rep = orlov_checks("BLOWUP", chi_X=3, chi_Z=1, n=2, chi_total=5)
    assert not rep.all_passed


def test_orlov_rejects():
    with pytest.raises(ValueError):
        orlov_checks("BLOWUP", chi_X=3, chi_Z=1, n=1)
    with pytest.raises(ValueError):
        orlov_checks("PROJECTIVE_BUNDLE", chi_base=3, n=0)
    with pytest.raises(ValueError):
        orlov_checks("FLIP")


# -- catalog -----------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_even_quadrics(n):
    rep = example_catalog("quadric_even", n)
    assert rep.block_of("HPD_CATEGORY").rank == 2
    assert rep.all_passed


def test_catalog_examples():
    assert example_catalog("cubic_fourfold").block_of("HPD_CATEGORY").rank == 24
    g = example_catalog("grassmannian_lefschetz", 3)
    assert g.certificate("lefschetz_rank").lhs == 21 == 7 * 3
    pencil = example_catalog("two_cubics_pencil")
    assert pencil.case_blocks[0].rank == -144
    assert any("Calabi-Yau" in a for a in pencil.annotations)


def test_catalog_all_pass_and_round_trip():
    for name in CATALOG:
        rep = example_catalog(name)
        assert rep.all_passed
        assert SODReport.from_dict(rep.to_dict()) == rep


def test_catalog_rejects_unknown():
    with pytest.raises(ValueError, match="unknown example"):
        example_catalog("k3_of_degree_2")

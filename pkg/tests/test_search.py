"""Counting formulas, the orbit-table search, and the raw table scans."""

import itertools

import pytest

from addhom.errors import NotPrimeField, SearchSpaceTooLarge
from addhom.fields import PrimeField, Rationals, gf
from addhom.maps import (
    EXHAUSTIVE,
    IndicatorMap,
    check_additive,
    check_homogeneous,
    check_linear,
    map_to_dict,
)
from addhom.search import (
    SearchConfig,
    count_homogeneous,
    count_linear,
    scan_additive_tables,
    search_homogeneous_nonadditive,
    verify_theorem1_prime,
)
from addhom.spaces import VectorSpace

Z2 = PrimeField(2)
Z3 = PrimeField(3)
Z5 = PrimeField(5)
GF4 = gf(2, 2)


# brute-force oracles over raw tables (tiny instances only) --------------------

def _all_table_maps(field, du, dv):
    dom = VectorSpace(field, du)
    cod = VectorSpace(field, dv)
    dvecs = list(dom.vectors())
    cvecs = list(cod.vectors())
    for outs in itertools.product(cvecs, repeat=len(dvecs)):
        yield dom, cod, dict(zip(dvecs, outs))


def _table_is_homogeneous(field, dom, cod, table):
    for lam in field.elements():
        for v in dom.vectors():
            if table[dom.scalar_mul(lam, v)] != cod.scalar_mul(lam, table[v]):
                return False
    return True


def _table_is_additive(dom, cod, table):
    vecs = list(dom.vectors())
    for u1 in vecs:
        for u2 in vecs:
            if table[dom.add(u1, u2)] != cod.add(table[u1], table[u2]):
                return False
    return True


# counting --------------------------------------------------------------------

def test_count_homogeneous_examples():
    assert count_homogeneous(GF4, 2, 1) == 1024
    assert count_homogeneous(Z2, 2, 1) == 8
    for field in (Z2, Z3, Z5, GF4):
        assert count_homogeneous(field, 1, 1) == field.order


def test_count_linear_examples():
    assert count_linear(GF4, 2, 1) == 16
    assert count_linear(Z2, 2, 1) == 4
    assert count_linear(Z3, 1, 1) == 3


@pytest.mark.parametrize(
    "field,du,dv",
    [(Z2, 1, 1), (Z2, 2, 1), (Z2, 1, 2), (Z2, 2, 2), (Z3, 1, 1), (GF4, 1, 1)],
    ids=["Z2-1-1", "Z2-2-1", "Z2-1-2", "Z2-2-2", "Z3-1-1", "GF4-1-1"],
)
def test_counts_match_raw_table_bruteforce(field, du, dv):
    hom = 0
    lin = 0
    for dom, cod, table in _all_table_maps(field, du, dv):
        if _table_is_homogeneous(field, dom, cod, table):
            hom += 1
            if _table_is_additive(dom, cod, table):
                lin += 1
    assert hom == count_homogeneous(field, du, dv)
    assert lin == count_linear(field, du, dv)


def test_counts_need_finite_field():
    from addhom.errors import InfiniteFieldError

    with pytest.raises(InfiniteFieldError):
        count_homogeneous(Rationals(), 2, 1)


# orbit-table search -------------------------------------------------------------

def test_search_z2_counts_and_indicator_among_witnesses():
    config = SearchConfig(Z2, 2, 1, mode="enumerate_all")
    result = search_homogeneous_nonadditive(config)
    assert result.homogeneous_count == 8
    assert result.homogeneous_additive_count == 4
    assert result.non_additive_count == 4
    indicator = IndicatorMap()
    dom = indicator.domain

    def same_function(m):
        return all(m.evaluate(v) == indicator.evaluate(v) for v in dom.vectors())

    assert any(same_function(m) for m in result.witness_maps)


def test_search_gf4_counts_and_witness():
    result = search_homogeneous_nonadditive(SearchConfig(GF4, 2, 1))
    assert result.homogeneous_count == 1024
    assert result.homogeneous_additive_count == 16
    assert result.non_additive_count == 1008
    assert result.witness_map is not None
    assert check_homogeneous(result.witness_map, EXHAUSTIVE).verdict == (
        "holds_exhaustive"
    )
    add = check_additive(result.witness_map, EXHAUSTIVE)
    assert add.verdict == "violated"
    assert result.witness_report == add


def test_search_dim1_finds_nothing():
    for field in (Z2, Z3, Z5, GF4):
        result = search_homogeneous_nonadditive(SearchConfig(field, 1, 1))
        assert result.non_additive_count == 0
        assert result.witness_map is None


def test_search_additive_count_equals_linear_count():
    for field, du, dv in [(Z2, 2, 1), (Z2, 2, 2), (Z3, 2, 1), (GF4, 2, 1)]:
        result = search_homogeneous_nonadditive(SearchConfig(field, du, dv))
        assert result.homogeneous_additive_count == count_linear(field, du, dv)
        assert result.homogeneous_count == count_homogeneous(field, du, dv)


def test_search_count_only_mode_suppresses_witness():
    result = search_homogeneous_nonadditive(
        SearchConfig(Z2, 2, 1, mode="count_only")
    )
    assert result.non_additive_count == 4
    assert result.witness_map is None
    assert result.witness_report is None


def test_search_guard_refuses():
    with pytest.raises(SearchSpaceTooLarge):
        search_homogeneous_nonadditive(SearchConfig(Z2, 8, 8))


def test_search_parallel_determinism():
    results = [
        search_homogeneous_nonadditive(SearchConfig(GF4, 2, 1, jobs=jobs)).to_dict()
        for jobs in (1, 2, 4)
    ]
    assert results[0] == results[1] == results[2]


def test_search_canonical_first_witness_z2():
    # assignment order is orbit-major, value-rank minor; the first
    # non-additive assignment over Z_2 (2 -> 1) is (0, 0, 1)
    result = search_homogeneous_nonadditive(SearchConfig(Z2, 2, 1))
    assert map_to_dict(result.witness_map)["map"]["values"] == [
        ["(0,1)", "(0)"],
        ["(1,0)", "(0)"],
        ["(1,1)", "(1)"],
    ]


def test_search_result_json_shape():
    d = search_homogeneous_nonadditive(SearchConfig(Z2, 2, 1)).to_dict()
    assert d["homogeneous"] == "8"
    assert d["homogeneous_additive"] == "4"
    assert d["non_additive"] == "4"
    assert d["witness"]["map"]["kind"] == "orbit_table"
    assert d["witness_report"]["verdict"] == "violated"
    assert d["instance"]["field"] == "Fp:2"


# raw table scans -------------------------------------------------------------------

@pytest.mark.parametrize(
    "p,du,dv,expected",
    [(2, 1, 1, 2), (2, 2, 1, 4), (2, 2, 2, 16), (3, 1, 1, 3), (3, 2, 1, 9),
     (5, 1, 1, 5)],
)
def test_verify_theorem1_prime_instances(p, du, dv, expected):
    report = verify_theorem1_prime(PrimeField(p), du, dv)
    assert report.additive_count == expected == p ** (du * dv)
    assert report.additive_nonhomogeneous_count == 0
    assert report.additivity_implies_homogeneity


def test_verify_theorem1_matches_naive_filter():
    # independent pass with map-level checkers over all Z_3 tables, dims 1 -> 1
    from addhom.maps import TableMap

    additive = 0
    for dom, cod, table in _all_table_maps(Z3, 1, 1):
        m = TableMap(dom, cod, table)
        if check_additive(m, EXHAUSTIVE).holds:
            additive += 1
            assert check_homogeneous(m, EXHAUSTIVE).holds
    assert additive == verify_theorem1_prime(Z3, 1, 1).additive_count == 3


def test_verify_theorem1_rejects_non_prime():
    with pytest.raises(NotPrimeField):
        verify_theorem1_prime(GF4, 1, 1)
    with pytest.raises(NotPrimeField):
        verify_theorem1_prime(Rationals(), 1, 1)


def test_gf4_contrast_has_additive_nonhomogeneous_tables():
    report = scan_additive_tables(GF4, 1, 1)
    assert report.additive_count == 16
    assert report.additive_nonhomogeneous_count == 12
    m = report.first_nonhomogeneous
    assert check_additive(m, EXHAUSTIVE).holds
    assert not check_homogeneous(m, EXHAUSTIVE).holds
    assert check_linear(m, EXHAUSTIVE).witness.kind == "homogeneity"


def test_table_scan_guard():
    with pytest.raises(SearchSpaceTooLarge):
        scan_additive_tables(Z5, 3, 3)

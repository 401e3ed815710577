import pytest

from onebrace import (
    D3,
    QuotientSpec,
    UnsupportedStrategy,
    build_quotient,
    build_trivial_cyclic,
    classify_NS,
    is_ideal,
    is_left_ideal,
    left_series,
    star_series,
    star_subgroup,
    subbrace_closure,
)
from onebrace.core import multiple
from onebrace.series import series_report, subgroup_of, whole, zero_subgroup
from onebrace.finite import CayleyBrace

from oracles import naive_closure, naive_subgroup


def _sizes(stages):
    return [len(s) for s in stages]


def test_star_subgroup_examples(d3_mod5):
    A = whole(d3_mod5)
    A2 = star_subgroup(d3_mod5, A, A)
    assert set(A2.elements()) == {(0, j, k) for j in range(5) for k in range(5)}
    assert star_subgroup(d3_mod5, A, A2).is_zero
    assert star_subgroup(d3_mod5, zero_subgroup(d3_mod5), A).is_zero


def test_star_subgroup_matches_naive(d3_mod3):
    A = whole(d3_mod3)
    stars = {d3_mod3.elements()[s] for s in d3_mod3.star_table.ravel().tolist()}
    expected = naive_subgroup(d3_mod3.add, d3_mod3.zero, stars)
    assert set(star_subgroup(d3_mod3, A, A).elements()) == expected


def test_additive_closure_matches_naive(d3_mod5):
    for gens in ([(1, 0, 0)], [(0, 2, 0), (0, 0, 3)], [(2, 4, 1), (3, 0, 0)], []):
        got = set(subgroup_of(d3_mod5, gens).elements())
        assert got == naive_subgroup(d3_mod5.add, d3_mod5.zero, gens)


def test_series_d3_mod5(d3_mod5):
    assert _sizes(left_series(d3_mod5)) == [125, 25, 1]
    assert _sizes(star_series(d3_mod5)) == [125, 25, 5, 1]
    assert set(star_series(d3_mod5)[2].elements()) == {(0, 0, k) for k in range(5)}


def test_series_small(d2_mod3, trivial7):
    assert _sizes(left_series(d2_mod3)) == [9, 3, 1]
    assert _sizes(star_series(d2_mod3)) == [9, 3, 1]
    assert _sizes(left_series(trivial7)) == [7, 1]
    one = build_trivial_cyclic(1)
    assert _sizes(star_series(one)) == [1]
    assert classify_NS(one) == (1, 1)


def test_classify_examples(d3_mod5):
    assert classify_NS(d3_mod5) == (4, 3)
    assert classify_NS(build_trivial_cyclic(4)) == (2, 2)
    for m in (2, 3, 7):
        assert classify_NS(build_quotient(QuotientSpec("d2", m))) == (3, 3)


def _cyclic_group_with_brace(n):
    """Brace on Z/n (n even) with xy = x + (-1)^x y; its series stall at 2Z/n."""
    elems = list(range(n))
    add = [[(i + j) % n for j in elems] for i in elems]
    mul = [[(i + (j if i % 2 == 0 else -j)) % n for j in elems] for i in elems]
    return CayleyBrace(elems, add, mul, name=f"dihedral_{n}")


def test_not_nilpotent_within_bound():
    from onebrace import check_brace_axioms

    b = _cyclic_group_with_brace(6)
    assert all(r.passed for r in check_brace_axioms(b))
    rep = series_report(b, max_depth=10)
    assert rep.ns_class is None
    assert rep.to_dict()["verdict"] == "not nilpotent within bound"


def test_max_depth_truncates(d3_mod5):
    assert classify_NS(d3_mod5, max_depth=3) is None
    assert classify_NS(d3_mod5, max_depth=4) == (4, 3)


def test_series_descending(d3_mod5):
    for chain in (left_series(d3_mod5), star_series(d3_mod5)):
        for big, small in zip(chain, chain[1:]):
            assert small.members < big.members


@pytest.mark.parametrize("fam, m", [("d2", 4), ("d3", 3), ("d3", 5)])
def test_stages_are_ideals(fam, m):
    b = build_quotient(QuotientSpec(fam, m))
    A = whole(b)
    for L in left_series(b):
        assert is_left_ideal(b, L).passed
        assert is_left_ideal(b, star_subgroup(b, L, A)).passed
        assert is_left_ideal(b, star_subgroup(b, A, L)).passed
    for L in star_series(b):
        assert is_ideal(b, L).passed
        assert is_ideal(b, star_subgroup(b, L, A)).passed


def test_left_ideal_failure_witness(d3_mod5):
    L = subgroup_of(d3_mod5, [(1, 0, 0)])
    rep = is_left_ideal(d3_mod5, L)
    assert not rep.passed
    # first (a, b) in table order with a * b outside L
    a, b = rep.witness
    assert (a, b) == ((0, 1, 0), (1, 0, 0))
    assert D3.coerce((0, 0, 1)) == d3_mod5.sub(d3_mod5.sub(d3_mod5.mul(a, b), a), b)
    # (a1, a1) also witnesses: a1 * a1 = a2 is not in <a1>
    s = d3_mod5.sub(d3_mod5.sub(d3_mod5.mul((1, 0, 0), (1, 0, 0)), (1, 0, 0)), (1, 0, 0))
    assert s == (0, 1, 0) and s not in L


def test_ideal_failure(d3_mod5):
    # A^2 stage of the left series is an ideal; <a2> is a left ideal but not an ideal
    L = subgroup_of(d3_mod5, [(0, 1, 0)])
    assert is_left_ideal(d3_mod5, L).passed
    rep = is_ideal(d3_mod5, L)
    assert not rep.passed and rep.name == "ideal"


def test_subbrace_closure_examples(d2_mod3, d3_mod5):
    assert len(subbrace_closure(d2_mod3, [(1, 0)])) == 9
    assert subbrace_closure(d2_mod3, []) == {(0, 0)}
    assert subbrace_closure(d2_mod3, [(0, 0)]) == {(0, 0)}
    assert subbrace_closure(d3_mod5, [(0, 1, 0)]) == {(0, k, 0) for k in range(5)}


@pytest.mark.parametrize("fam, m", [("d2", 4), ("d3", 3)])
def test_closure_matches_naive_and_coefficient_form(fam, m):
    b = build_quotient(QuotientSpec(fam, m))
    for gen in b.elements()[:: max(1, b.order() // 7)]:
        got = subbrace_closure(b, [gen])
        assert got == naive_closure(b.add, b.mul, b.zero, [gen])
        from onebrace import generator_sequence

        g = list(generator_sequence(b, gen, 3))
        combos = {b.add(b.add(multiple(b, i, g[0]), multiple(b, j, g[1])), multiple(b, k, g[2]))
                  for i in range(m) for j in range(m) for k in range(m)}
        assert got == combos


def test_series_needs_finite():
    with pytest.raises(UnsupportedStrategy):
        left_series(D3)

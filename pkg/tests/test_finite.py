import itertools
import json
import random

import pytest

from onebrace import (
    AxiomViolation,
    IllegalModulus,
    NotInSubbrace,
    QuotientSpec,
    build_quotient,
    build_trivial_cyclic,
    check_brace_axioms,
    decompose,
    ingest_table,
    load_brace,
    replay,
)
from onebrace.finite import (
    BraceSpecError,
    CayleyBrace,
    additive_order,
    quotient_tables,
    replay_representative,
    representative_violation,
)
from onebrace.free import D3, d2_mul, d3_mul

from conftest import relabel


def test_d3_mod5(d3_mod5):
    assert d3_mod5.order() == 125
    assert d3_mod5.zero == (0, 0, 0)


def test_quotient_tables_match_reduced_formula():
    for fam, m, mul in (("d2", 4, d2_mul), ("d3", 5, d3_mul)):
        b = quotient_tables(QuotientSpec(fam, m))
        for x, y in itertools.product(b.elements(), repeat=2):
            assert b.mul(x, y) == tuple(k % m for k in mul(x, y))


@pytest.mark.parametrize("m", [2, 4, 6])
def test_even_d3_rejected(m):
    with pytest.raises(IllegalModulus) as info:
        build_quotient(QuotientSpec("d3", m))
    rep = info.value.report
    assert replay(quotient_tables(QuotientSpec("d3", m)), rep)


def test_d3_mod2_witness():
    with pytest.raises(IllegalModulus) as info:
        build_quotient(QuotientSpec("d3", 2))
    assert info.value.report.witness == ((1, 0, 0), (1, 0, 0), (1, 0, 0))


@pytest.mark.parametrize("m", [2, 4])
def test_representative_violation_for_even(m):
    rep = representative_violation(QuotientSpec("d3", m))
    assert not rep.passed
    assert replay_representative(QuotientSpec("d3", m), rep.witness)


@pytest.mark.parametrize("fam, m", [("d3", 3), ("d3", 5), ("d2", 2), ("d2", 4)])
def test_representative_invariance_when_legal(fam, m):
    assert representative_violation(QuotientSpec(fam, m)).passed


def test_d2_mod2_is_valid(d2_mod2):
    assert d2_mod2.order() == 4
    assert all(r.passed for r in check_brace_axioms(d2_mod2))


def test_quotient_spec_validation():
    with pytest.raises(BraceSpecError):
        QuotientSpec("d4", 3)
    with pytest.raises(BraceSpecError):
        QuotientSpec("d2", 1)
    assert not QuotientSpec("d3", 8).legal and QuotientSpec("d2", 8).legal


def test_trivial_cyclic():
    b = build_trivial_cyclic(7)
    assert b.mul(3, 5) == 1 == b.add(3, 5)
    assert build_trivial_cyclic(1).elements() == (0,)
    with pytest.raises(BraceSpecError):
        build_trivial_cyclic(0)


def _doc(brace, perm=None, labels=None):
    n = brace.order()
    perm = perm or list(range(n))
    # element perm[i] of the original becomes position i
    pos = {p: i for i, p in enumerate(perm)}
    add = [[pos[int(brace.add_table[perm[i], perm[j]])] for j in range(n)] for i in range(n)]
    mul = [[pos[int(brace.mul_table[perm[i], perm[j]])] for j in range(n)] for i in range(n)]
    labels = labels or [f"e{p}" for p in perm]
    return {"kind": "table", "elements": labels, "add": add, "mul": mul}


def test_ingest_shuffled_d2_mod2(d2_mod2):
    doc = _doc(d2_mod2, perm=[3, 1, 0, 2])
    b = ingest_table(json.loads(json.dumps(doc)))
    assert b.zero == "e0"
    # e3 is (1,1); (1,1)(1,1) = (2, 3) = (0,1) mod 2, which is e1
    assert b.mul("e3", "e3") == "e1"


def test_ingest_not_latin():
    doc = {"kind": "table", "elements": ["0", "1"], "add": [[0, 1], [1, 0]], "mul": [[0, 1], [1, 1]]}
    with pytest.raises(AxiomViolation, match="Latin"):
        ingest_table(doc)


def test_ingest_corrupted_brace_law(d2_mod3):
    doc = _doc(d2_mod3, labels=[list(e) for e in d2_mod3.elements()])
    i = d2_mod3.index((1, 0))
    j = d2_mod3.index((2, 0))
    # exchange rows i and j of mul: remains a Latin square
    doc["mul"][i], doc["mul"][j] = doc["mul"][j], doc["mul"][i]
    with pytest.raises(AxiomViolation) as info:
        ingest_table(doc)
    rep = info.value.report
    assert rep.witness is not None
    raw = CayleyBrace([tuple(e) for e in doc["elements"]], doc["add"], doc["mul"])
    assert replay(raw, rep)


def test_ingest_malformed():
    with pytest.raises(BraceSpecError):
        ingest_table({"kind": "table", "elements": [0, 1]})
    with pytest.raises(BraceSpecError):
        ingest_table({"kind": "table", "elements": [0, 1], "add": [[0, 1]], "mul": [[0, 1]]})
    with pytest.raises(BraceSpecError):
        ingest_table({"kind": "table", "elements": [0, 0], "add": [[0, 1], [1, 0]],
                      "mul": [[0, 1], [1, 0]]})
    with pytest.raises(BraceSpecError):
        ingest_table({"kind": "table", "elements": [0, 1], "add": [[0, 2], [1, 0]],
                      "mul": [[0, 1], [1, 0]]})


def test_load_brace_kinds():
    assert load_brace({"kind": "free_d3"}) is D3
    assert load_brace({"kind": "quotient_d2", "modulus": 3}).order() == 9
    assert load_brace({"kind": "trivial_cyclic", "modulus": 4}).order() == 4
    for bad in ({"kind": "nope"}, {"kind": "quotient_d3"}, {"kind": "trivial_cyclic", "modulus": "3"}, []):
        with pytest.raises(BraceSpecError):
            load_brace(bad)


def test_to_document_round_trip(d3_mod3):
    b = ingest_table(json.loads(json.dumps(d3_mod3.to_document())))
    assert b.elements() == d3_mod3.elements()
    assert b.mul((1, 2, 0), (2, 2, 1)) == d3_mod3.mul((1, 2, 0), (2, 2, 1))


def test_decompose_examples(d3_mod5, d2_mod2):
    d = decompose(d3_mod5, (1, 0, 0), (2, 3, 1))
    assert d.coefficients == (2, 3, 1)
    assert decompose(d3_mod5, (1, 0, 0), (0, 0, 0)).coefficients == (0, 0, 0)
    rel = relabel(d2_mod2, ["w", "x", "y", "z"])
    img = rel.elements()[d2_mod2.index((1, 1))]
    a = rel.elements()[d2_mod2.index((1, 0))]
    assert decompose(rel, a, img).coefficients == (1, 1, 0)


def test_decompose_not_in_subbrace(d3_mod5):
    with pytest.raises(NotInSubbrace):
        decompose(d3_mod5, (0, 1, 0), (1, 0, 0))


@pytest.mark.parametrize("fam, m", [("d2", 5), ("d3", 3), ("d3", 5)])
def test_decompose_round_trip(fam, m):
    b = build_quotient(QuotientSpec(fam, m))
    a = (1, 0) if fam == "d2" else (1, 0, 0)
    for x in b.elements():
        d = decompose(b, a, x)
        assert d.reassemble(b) == x
        assert all(0 <= k < additive_order(b, g) for k, g in zip(d.coefficients, d.generators))


def test_constructed_braces_pass_axioms():
    rng = random.Random(0)
    for fam, m in (("d2", 6), ("d3", 7), ("d2", 2)):
        b = build_quotient(QuotientSpec(fam, m))
        assert all(r.passed for r in check_brace_axioms(b))
        x, y = rng.choice(b.elements()), rng.choice(b.elements())
        assert b.mul(x, b.inv(x)) == b.zero and b.add(y, b.neg(y)) == b.zero

import json
import random
from dataclasses import replace

import pytest

from centlab import lab
from centlab.centralizers import NotApplicable
from centlab.config import Settings
from centlab.errors import CapExceeded, InvalidParameter, NotAGroup
from centlab.group import from_cayley_table
from centlab.isoclinism import IsomorphismWitness, is_isomorphic


@pytest.fixture(scope="module")
def cat57():
    return lab.build_catalog(57)


def labels(catalog):
    return [e.label for e in catalog]


def test_catalog_small():
    cat = lab.build_catalog(6)
    got = labels(cat)
    for n in range(1, 7):
        assert f"Z{n}" in got
    assert "S3" in got and "D6" in got and "Z3:Z2" in got
    dedup = labels(lab.build_catalog(6, dedup=True))
    assert dedup == ["Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "S3", "D4"]


def test_catalog_contents(cat57):
    got = labels(cat57)
    assert "Z55" in got and "Z11:Z5" in got
    assert len(got) == len(set(got))
    for name in ["S3", "S4", "A4", "Q8", "D8"]:
        assert name in got
    assert "A5" not in got and "PGL(2,7)" not in got
    assert all(e.group.order <= 57 for e in cat57)
    with pytest.raises(CapExceeded):
        lab.build_catalog(500)


def test_catalog_dedup_keeps_one_d10():
    cat = lab.build_catalog(60, dedup=True)
    d10 = next(e for e in cat if e.label == "D10")
    twins = [e for e in cat if e.group.order == 10
             and isinstance(is_isomorphic(e.group, d10.group), IsomorphismWitness)]
    assert len(twins) == 1
    assert "Z5:Z2" not in labels(cat)


def test_catalog_entries_consistent(cat57):
    for e in cat57:
        assert e.spec.render() == e.label
        assert e.stats.cent_count == len(e.stats.cent_set)


def test_search_reproduces_order_55_pair():
    res = lab.search_counterexamples(lab.build_catalog(55))
    keys = {(r.shared_cent_count, r.shared_derived_order, r.left.label, r.right.label) for r in res.reports}
    assert (13, 11, "D22", "Z11:Z5") in keys
    assert not res.inconclusive


def test_search_abelian_only():
    cat = [e for e in lab.build_catalog(10) if e.group.is_abelian()]
    res = lab.search_counterexamples(cat)
    assert res.reports == []
    assert len(res.isoclinic_pairs) == len(cat) * (len(cat) - 1) // 2


def test_search_order_57(cat57):
    res = lab.search_counterexamples(cat57)
    keys = {r.sort_key() for r in res.reports}
    assert (21, 19, "D38", "Z19:Z3") in keys
    for r in res.reports:
        assert r.left.stats.cent_count == r.right.stats.cent_count == r.shared_cent_count
        assert r.left.stats.derived_order == r.right.stats.derived_order == r.shared_derived_order
        assert r.left.label < r.right.label


def test_search_independent_of_order(cat57):
    want = [r.sort_key() for r in lab.search_counterexamples(cat57).reports]
    shuffled = list(cat57)
    random.Random(5).shuffle(shuffled)
    assert [r.sort_key() for r in lab.search_counterexamples(shuffled).reports] == want


def test_isoclinic_pairs_share_cent_count(cat57):
    by_label = {e.label: e for e in cat57}
    res = lab.search_counterexamples(cat57)
    assert res.isoclinic_pairs
    for a, b in res.isoclinic_pairs:
        assert by_label[a].stats.cent_count == by_label[b].stats.cent_count


def test_report_json(cat57):
    r = lab.search_counterexamples(cat57).reports[0]
    js = json.loads(json.dumps(r.to_json()))
    assert js["schema"] == 1 and js["isoclinic"] is False
    assert js["left"]["cent_count"] == js["shared_cent_count"]


def test_family():
    g, h = lab.cpo_pair_family(11)
    assert (g.group.order, h.group.order) == (55, 22)
    g, h = lab.cpo_pair_family(7)
    assert (g.group.order, h.group.order) == (21, 14)
    assert g.stats.cent_count == h.stats.cent_count == 9  # brute force: 9 each
    assert isinstance(lab.cpo_pair_family(5), NotApplicable)
    assert isinstance(lab.cpo_pair_family(13), NotApplicable)  # 12 = 2^2 * 3
    with pytest.raises(InvalidParameter):
        lab.cpo_pair_family(9)


@pytest.mark.parametrize("p", [7, 11, 23])
def test_family_property(p):
    res = lab.cpo_pair_family(p)
    for e in res:
        assert e.cpo.is_cpo and e.stats.cent_count == p + 2 and e.stats.derived_order == p


def test_relaxed_family():
    assert [tuple(e.group.order for e in pair) for pair in lab.relaxed_cpo_pair_families(31)] == \
        [(155, 93), (155, 62), (93, 62)]
    assert len(lab.relaxed_cpo_pair_families(13)) == 1
    assert lab.relaxed_cpo_pair_families(3) == []


def test_verify_small_catalog():
    results = lab.verify_theorems(lab.build_catalog(40))
    assert [r.name for r in results] == [s(lab.build_catalog(1), Settings()).name for s in lab.SWEEPS]
    assert all(r.passed for r in results), [r.failures for r in results if not r.passed]
    assert all(r.checked > 0 for r in results if r.name != "pgl27-cent-count")


def test_verify_reports_failures_as_data():
    cat = lab.build_catalog(12)
    z6 = next(e for e in cat if e.label == "Z6")
    fake = replace(z6, stats=replace(z6.stats, cent_count=2))
    res = lab.sweep_small_cent_counts(cat + [fake], Settings())
    assert not res.passed and res.failures[0].startswith("Z6")


def test_nonassociative_table_never_reaches_sweeps():
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAGroup):
        from_cayley_table(loop)


def test_pgl27_sweep():
    cat = [lab.make_entry("PGL(2,7)")]
    assert lab.sweep_pgl27(cat, Settings()).checked == 1
    assert lab.sweep_pgl27(cat, Settings()).passed
    formula = lab.sweep_cent_formula(cat, Settings())
    assert formula.passed and formula.skipped == 1 and formula.checked == 0


def test_strict_settings_classification():
    cat = lab.build_catalog(20, Settings(strict_cpo=True))
    assert lab.sweep_cpo_classification(cat, Settings(strict_cpo=True)).passed

"""Acceptance checks, one test per criterion.

Each test records one ``PASS``/``FAIL`` line; the lines are printed in the
terminal summary at the end of the run. Run with::

    pytest tests/test_acceptance.py -v
"""
import functools
import json
import time

import pytest

import naive
from acceptance_log import RESULTS
from centlab import lab
from centlab.centralizers import cent_count
from centlab.cli import main
from centlab.config import Settings
from centlab.group import direct_product, alternating, cyclic, induced_group, quotient
from centlab.isoclinism import IsoclinismWitness, Inconclusive, find_isoclinism, verify_isoclinism
from centlab.spec import realize
from centlab.structure import (center, centralizer, derived_subgroup, fitting, frobenius_decomposition,
                               intersection, o_p, prime_divisors, sylow)

_CACHE = {}


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                _line("FAIL", number, title, time.perf_counter() - t0, f"{type(exc).__name__}: {exc}")
                raise
            _line("PASS", number, title, time.perf_counter() - t0)
        return run
    return wrap


def _line(status, number, title, seconds, detail=""):
    msg = f"\n[{status}] criterion {number:>2}: {title} ({seconds:.2f}s)"
    if detail:
        msg += f" -- {detail.splitlines()[0][:200]}"
    RESULTS.append(msg.strip())
    print(msg)


def catalog200():
    if "c200" not in _CACHE:
        _CACHE["c200"] = lab.build_catalog(200)
    return _CACHE["c200"]


def _cli_json(capsys, *argv):
    code = main(["--json", *argv])
    return code, json.loads(capsys.readouterr().out)


def _nonabelian_cpo(catalog):
    return [e for e in catalog if e.cpo.is_cpo and not e.group.is_abelian()]


@criterion(1, "order-55 and order-22 groups share |Cent| = 13 and |G'| = 11 but are not isoclinic")
def test_criterion_01_same_counts_not_isoclinic(capsys):
    t0 = time.perf_counter()
    _, a = _cli_json(capsys, "info", "Z11:Z5")
    _, b = _cli_json(capsys, "info", "D22")
    code, iso = _cli_json(capsys, "isoclinic", "Z11:Z5", "D22")
    elapsed = time.perf_counter() - t0
    assert (a["order"], b["order"]) == (55, 22)
    assert (a["cent_count"], b["cent_count"]) == (13, 13)
    assert (a["derived_order"], b["derived_order"]) == (11, 11)
    assert code == 0 and iso["verdict"] == "refuted"
    assert elapsed < 1.0, f"{elapsed:.2f}s"


@criterion(2, "|Cent(PGL(2,7))| = 107")
def test_criterion_02_pgl27(capsys):
    t0 = time.perf_counter()
    _, stats = _cli_json(capsys, "cent", "PGL(2,7)")
    elapsed = time.perf_counter() - t0
    assert stats["order"] == 336
    assert stats["cent_count"] == 107
    assert elapsed < 10.0, f"{elapsed:.2f}s"


@criterion(3, "nonabelian Cpo of order pq <= 200 has |Cent| = p + 2")
def test_criterion_03_cent_formula():
    t0 = time.perf_counter()
    cat = catalog200()
    found = {}
    for e in _nonabelian_cpo(cat):
        assert e.cpo.case == "pq"
        assert e.stats.cent_count == e.cpo.p + 2, e.label
        found[e.label] = e.stats.cent_count
    elapsed = time.perf_counter() - t0
    for label, want in [("S3", 5), ("D10", 7), ("Z7:Z3", 9), ("Z11:Z5", 13), ("Z19:Z3", 21)]:
        assert found[label] == want
    assert len(found) > 20
    assert elapsed < 5.0, f"{elapsed:.2f}s"


@criterion(4, "Cpo catalog groups are exactly prime order or pq with F(G) = G' of order p")
def test_criterion_04_cpo_classification():
    r = lab.sweep_cpo_classification(catalog200(), Settings())
    assert r.passed, r.failures
    assert r.checked == len(catalog200())
    for e in catalog200():
        if e.cpo.is_cpo and e.cpo.case == "pq":
            p, q = e.cpo.p, e.cpo.q
            assert p > q and (p - 1) % q == 0
            assert fitting(e.group) == derived_subgroup(e.group)
            assert fitting(e.group).order == p


@criterion(5, "nonabelian Cpo groups are Frobenius with prime-order Fitting kernel and abelian complement")
def test_criterion_05_frobenius():
    settings = Settings(lattice_cap=200)
    groups = _nonabelian_cpo(catalog200())
    for e in groups:
        g = e.group
        fd = frobenius_decomposition(g, lattice_cap=settings.lattice_cap)
        assert fd is not None, e.label
        assert fd.kernel == fitting(g) and fd.kernel.order == e.cpo.p
        assert induced_group(fd.complement).is_abelian()
        assert fd.kernel.order * fd.complement.order == g.order
    r = lab.sweep_cpo_frobenius(catalog200(), settings)
    assert r.passed and r.skipped == 0 and r.checked == len(groups)


@criterion(6, "nonabelian Cpo groups have |Cent| >= smallest prime divisor + 3")
def test_criterion_06_lower_bound():
    groups = _nonabelian_cpo(catalog200())
    assert groups
    for e in groups:
        assert e.stats.cent_count >= prime_divisors(e.group)[0] + 3, e.label


@criterion(7, "|Cent| = 1 iff abelian, never 2 or 3, and the subgroup sandwich inequality")
def test_criterion_07_basic_facts():
    cat = catalog200()
    for e in cat:
        assert (e.stats.cent_count == 1) == e.group.is_abelian(), e.label
        assert e.stats.cent_count not in (2, 3), e.label
    r = lab.sweep_cent_sandwich(cat, Settings())
    assert r.passed, r.failures
    assert r.checked == sum(1 for e in cat if e.group.order <= Settings().lattice_cap)


@criterion(8, "isoclinism witnesses are sound and isoclinic pairs share |Cent|")
def test_criterion_08_isoclinism(catalog120):
    cap = Settings().iso_cap
    within = 0
    for e in catalog200():
        g = e.group
        res = find_isoclinism(g, g, iso_cap=cap)
        if isinstance(res, Inconclusive):
            assert g.order // center(g).order > cap or derived_subgroup(g).order > cap, e.label
            continue
        within += 1
        assert isinstance(res, IsoclinismWitness), e.label
        assert verify_isoclinism(g, g, res)
    assert within > 250
    q8, d8 = realize("Q8"), realize("D8")
    w = find_isoclinism(q8, d8)
    assert isinstance(w, IsoclinismWitness) and verify_isoclinism(q8, d8, w)
    assert cent_count(q8) == cent_count(d8) == 4
    by_label = {e.label: e for e in catalog120}
    res = lab.search_counterexamples(catalog120)
    assert res.isoclinic_pairs
    for a, b in res.isoclinic_pairs:
        ga, gb = by_label[a].group, by_label[b].group
        w = find_isoclinism(ga, gb)
        assert verify_isoclinism(ga, gb, w)
        assert by_label[a].stats.cent_count == by_label[b].stats.cent_count


@criterion(9, "|Cent(M/(M n P))| = |Cent(M/(M' n P))| for nilpotent M and Sylow P, orders <= 120")
def test_criterion_09_nilpotent_quotients(catalog120):
    r = lab.sweep_quotient_cent(catalog120, Settings())
    assert r.passed, r.failures
    assert r.skipped == 0 and r.checked == len(catalog120)


@criterion(10, "cent_count(A5 x Z2) = cent_count(A5)")
def test_criterion_10_a5_times_z2():
    a5 = alternating(5)
    g = direct_product(a5, cyclic(2))
    Z, D = center(g), derived_subgroup(g)
    assert intersection(D, Z).order == 1
    qg, _ = quotient(g, Z)
    assert derived_subgroup(qg).order == qg.order
    assert cent_count(g) == cent_count(a5)
    assert cent_count(a5) == 22  # brute-force value
    assert naive.cent_count(a5.table.tolist()) == 22


@criterion(11, "centralizers, center, derived subgroup and Sylow data match direct scans for orders <= 16")
def test_criterion_11_oracles():
    groups = [e for e in catalog200() if e.group.order <= 16]
    assert len(groups) > 30
    for e in groups:
        g = e.group
        t = g.table.tolist()
        for x in range(g.order):
            assert set(centralizer(g, x).elements) == naive.centralizer(t, x), (e.label, x)
        assert set(center(g).elements) == naive.center(t), e.label
        assert set(derived_subgroup(g).elements) == naive.derived(t), e.label
        subs = naive.subgroups(t)
        for p in prime_divisors(g):
            info = sylow(g, p)
            want = naive.sylows(t, p, subs)
            assert {frozenset(s.elements) for s in info.all} == want, (e.label, p)
            assert info.count == len(want)
            assert frozenset(info.sylow.elements) in want
            assert set(o_p(g, p).elements) == frozenset.intersection(*want)

"""Interior operators: axioms, the operator lattice, continuity, initial lifts.

Expected values in the fixtures below were frozen from direct evaluation of
the defining formulas (contraction/monotonicity/top scans, the pointwise
order, and the transfer tables); the corpus scans re-derive the gap
predicates from the transfer tables as an independent cross-check.
"""
import random
from itertools import product

import pytest

from localelab.corpus import chain3, chain4, child_seed, corpus_frames, square, two
from localelab.errors import EmptyFamily, HostMismatch
from localelab.interior import (
    InteriorOperator,
    check_composition,
    check_interior,
    check_open_preimage,
    check_universal_property,
    discrete_op,
    family_initial_check,
    initial_interior,
    is_I_continuous,
    make_continuous_op,
    op_join,
    op_le,
    op_le_gap,
    op_meet,
    open_fixpoints,
    random_op,
    trivial_op,
)
from localelab.maps import (
    FrameHom,
    compose_localic,
    enumerate_frame_homs,
    identity_localic,
    localic_map,
    right_adjoint,
)
from localelab.sublocales import enumerate_sublocales, transfer_of

_MAP_CACHE = {}


def corpus_maps(max_n):
    """All localic maps between corpus frames of size <= max_n."""
    if max_n not in _MAP_CACHE:
        frames = [fr for _, fr in corpus_frames(3) if fr.n <= max_n]
        maps = []
        for src, tgt in product(frames, frames):
            for tb in enumerate_frame_homs(src, tgt):
                maps.append(right_adjoint(FrameHom(src, tgt, tb)))
        _MAP_CACHE[max_n] = tuple(maps)
    return _MAP_CACHE[max_n]


def seeded(tag, k=0):
    return random.Random(child_seed(tag, k))


def f_up():
    return localic_map(two(), chain3(), (0, 2))


def f_dn():
    # right adjoint of the inclusion TWO -> CHAIN3; collapses m to 0
    f = right_adjoint(FrameHom(two(), chain3(), (0, 2)))
    assert f.table == (0, 0, 1)
    return f


def test_check_interior_spec_examples():
    sl = enumerate_sublocales(chain3())
    assert check_interior(discrete_op(sl)).ok
    assert check_interior(trivial_op(sl)).ok
    # sends {m,1} to {0,1}, which is not below it
    bad = InteriorOperator(sl, (0, 1, 1, 3))
    rep = check_interior(bad)
    assert rep.passed == {"I1": False, "I2": True, "I3": True}
    assert rep.witnesses == {"I1": ("{m,1}", "{0,1}")}
    assert not rep.ok
    assert rep.to_json()["witnesses"]["I1"] == ["{m,1}", "{0,1}"]


def test_operator_table_must_be_total():
    sl = enumerate_sublocales(chain3())
    with pytest.raises(ValueError):
        InteriorOperator(sl, (0, 1, 2))
    with pytest.raises(ValueError):
        InteriorOperator(sl, (0, 1, 2, 9))


def test_discrete_trivial_values():
    sl = enumerate_sublocales(chain3())
    assert discrete_op(sl).describe() == {
        "{1}": "{1}",
        "{0,1}": "{0,1}",
        "{m,1}": "{m,1}",
        "{0,m,1}": "{0,m,1}",
    }
    assert trivial_op(sl).describe() == {
        "{1}": "{1}",
        "{0,1}": "{1}",
        "{m,1}": "{1}",
        "{0,m,1}": "{0,m,1}",
    }


def test_op_join_meet_bounds_and_errors():
    sl = enumerate_sublocales(chain3())
    d, t = discrete_op(sl), trivial_op(sl)
    assert op_join([t, d]).table == d.table
    assert op_meet([t, d]).table == t.table
    with pytest.raises(EmptyFamily):
        op_join([])
    with pytest.raises(EmptyFamily):
        op_meet([])
    other = discrete_op(enumerate_sublocales(square()))
    with pytest.raises(HostMismatch):
        op_join([d, other])


def test_op_join_meet_of_random_pairs_valid():
    # spec of the operator lattice: pointwise joins/meets of valid operators
    # are valid, on every corpus frame with at most 6 elements
    frames = [fr for _, fr in corpus_frames(4) if fr.n <= 6]
    assert len(frames) >= 3
    for fr in frames:
        sl = enumerate_sublocales(fr)
        rng = seeded("op-pairs-" + fr.key())
        for _ in range(100):
            a, b = random_op(sl, rng), random_op(sl, rng)
            assert check_interior(op_join([a, b])).ok
            assert check_interior(op_meet([a, b])).ok


def test_op_le_examples():
    sl = enumerate_sublocales(chain3())
    d, t = discrete_op(sl), trivial_op(sl)
    assert op_le(t, d)
    assert not op_le(d, t)
    assert op_le_gap(d, t) == "{0,1}"
    assert op_le_gap(t, d) is None
    x = random_op(sl, seeded("op-le-refl"))
    assert op_le(x, x)
    with pytest.raises(HostMismatch):
        op_le(d, discrete_op(enumerate_sublocales(square())))


def test_operator_lattice_laws():
    rng = seeded("lattice-laws")
    for fr in [fr for _, fr in corpus_frames(3) if fr.n <= 5]:
        sl = enumerate_sublocales(fr)
        for _ in range(30):
            a, b, c = (random_op(sl, rng) for _ in range(3))
            j, m = op_join([a, b]), op_meet([a, b])
            assert op_le(a, j) and op_le(b, j)
            if op_le(a, c) and op_le(b, c):
                assert op_le(j, c)
            assert op_le(m, a) and op_le(m, b)
            if op_le(c, a) and op_le(c, b):
                assert op_le(c, m)


def test_random_op_valid_and_bounded():
    for fr in [fr for _, fr in corpus_frames(3) if fr.n <= 5]:
        sl = enumerate_sublocales(fr)
        d, t = discrete_op(sl), trivial_op(sl)
        rng = seeded("random-op-" + fr.key())
        for _ in range(100):
            x = random_op(sl, rng)
            assert check_interior(x).ok
            assert op_le(t, x) and op_le(x, d)


def test_is_I_continuous_identity_and_discrete():
    sl = enumerate_sublocales(chain3())
    x = random_op(sl, seeded("cont-id"))
    rep = is_I_continuous(identity_localic(chain3()), x, x)
    assert rep.ok and rep.checked == sl.n
    # discrete source operator makes any map continuous
    rng = seeded("cont-disc")
    for f in corpus_maps(4):
        opm = random_op(enumerate_sublocales(f.target), rng)
        assert is_I_continuous(f, discrete_op(enumerate_sublocales(f.source)), opm).ok


def test_is_I_continuous_fixtures():
    # trivial below, discrete above: passes, since every proper preimage of a
    # discrete-interior sublocale that lands on the source top has the source
    # top as its bound, and I3 keeps trivial at the top
    sl2, sl3 = enumerate_sublocales(two()), enumerate_sublocales(chain3())
    assert is_I_continuous(f_up(), trivial_op(sl2), discrete_op(sl3)).ok
    # the genuinely failing pair: identity cannot shrink discrete to trivial
    rep = is_I_continuous(identity_localic(chain3()), trivial_op(sl3), discrete_op(sl3))
    assert not rep.ok
    assert rep.witness == ("{0,1}", "{0,1}", "{1}")
    assert rep.witness_index == 1
    with pytest.raises(HostMismatch):
        is_I_continuous(f_up(), trivial_op(sl3), discrete_op(sl3))


def test_composition_fixtures():
    sl2, sl3 = enumerate_sublocales(two()), enumerate_sublocales(chain3())
    i3 = identity_localic(chain3())
    d3 = discrete_op(sl3)
    rep = check_composition(i3, i3, d3, d3, d3)
    assert rep.status == "pass" and rep.preimage_functorial
    # fixture chain TWO -> CHAIN3 -> TWO with discrete operators
    rep = check_composition(f_up(), f_dn(), discrete_op(sl2), d3, discrete_op(sl2))
    assert rep.status == "pass"
    assert rep.composite.ok and rep.preimage_functorial
    assert rep.functorial_witness is None
    # unmet precondition is reported, not raised
    rep = check_composition(i3, i3, trivial_op(sl3), d3, d3)
    assert rep.status == "precondition-unmet"
    assert not rep.f_continuous and rep.g_continuous
    assert rep.composite is None and rep.preimage_functorial is None
    assert rep.to_json()["status"] == "precondition-unmet"


def test_composition_random_chains():
    rng = seeded("comp-chains")
    done = 0
    for g in corpus_maps(4):
        for f in corpus_maps(4):
            if f.target != g.source:
                continue
            opn = random_op(enumerate_sublocales(g.target), rng)
            opm = make_continuous_op(g, opn, rng)
            opl = make_continuous_op(f, opm, rng)
            rep = check_composition(f, g, opl, opm, opn)
            assert rep.status == "pass", (f.table, g.table)
            done += 1
            if done >= 200:
                return
    raise AssertionError("not enough composable corpus pairs")


def test_initial_interior_identity():
    opm = random_op(enumerate_sublocales(chain3()), seeded("init-id"))
    cand, rep = initial_interior(identity_localic(chain3()), opm)
    assert cand.table == opm.table
    assert rep.ok and rep.anomalies == ()


def test_initial_interior_trivial_counterexample():
    # the map misses m, so the image of the source top is {0,1}, a proper
    # sublocale; trivial interior sends it to the bottom and the top law dies
    f = f_up()
    sl3 = enumerate_sublocales(chain3())
    cand, rep = initial_interior(f, trivial_op(sl3))
    assert cand.describe() == {"{1}": "{1}", "{0,1}": "{1}"}
    assert rep.axioms.passed == {"I1": True, "I2": True, "I3": False}
    assert rep.axioms.witnesses == {"I3": ("{1}",)}
    t = transfer_of(f)
    sl2 = t.source_lattice
    step = t.image_table[sl2.top]
    assert sl3.label(step) == "{0,1}" and step != sl3.top
    assert sl3.label(trivial_op(sl3)(step)) == "{1}"
    assert not rep.continuity.ok
    assert rep.continuity.witness == ("{0,m,1}", "{0,1}", "{1}")
    assert rep.anomalies == (
        {
            "kind": "top-gap",
            "at": "{0,1}",
            "predicate": "image-not-whole-target",
            "confirmed": True,
        },
        {
            "kind": "continuity-gap",
            "at": "{0,m,1}",
            "predicate": "image-not-whole-target",
            "confirmed": True,
        },
    )
    assert rep.unexplained == ()


def test_initial_interior_discrete_passes():
    sl2 = enumerate_sublocales(two())
    cand, rep = initial_interior(f_up(), discrete_op(enumerate_sublocales(chain3())))
    assert cand.table == discrete_op(sl2).table
    assert rep.ok and rep.anomalies == ()


def test_initial_interior_contraction_counterexample():
    # collapsing map: preimage of the image grows {0,1} to the whole frame
    cand, rep = initial_interior(f_dn(), discrete_op(enumerate_sublocales(two())))
    assert rep.axioms.passed == {"I1": False, "I2": True, "I3": True}
    assert rep.axioms.witnesses == {"I1": ("{0,1}", "{0,m,1}")}
    assert rep.anomalies == (
        {"kind": "contraction-gap", "at": "{0,1}", "predicate": "unit-gap", "confirmed": True},
        {"kind": "contraction-gap", "at": "{m,1}", "predicate": "unit-gap", "confirmed": True},
    )
    assert rep.unexplained == ()


def test_initial_candidate_valid_but_not_continuous():
    # all three axioms can pass while the map still fails continuity for its
    # own candidate; the gap is a counit failure away from the top
    f = localic_map(chain3(), chain4(), (1, 2, 3))
    sl4 = enumerate_sublocales(chain4())
    opm = InteriorOperator(sl4, (0, 0, 0, 0, 2, 3, 6, 7))
    assert check_interior(opm).ok
    cand, rep = initial_interior(f, opm)
    assert cand.table == trivial_op(enumerate_sublocales(chain3())).table
    assert rep.axioms.ok
    assert not rep.continuity.ok
    assert rep.continuity.witness == ("{0,a,1}", "{0,1}", "{1}")
    assert rep.anomalies == (
        {"kind": "continuity-gap", "at": "{0,a,1}", "predicate": "counit-gap", "confirmed": True},
        {"kind": "continuity-gap", "at": "{0,b,1}", "predicate": "counit-gap", "confirmed": True},
    )
    assert rep.unexplained == ()


def test_initial_interior_corpus_classification():
    """Monotonicity never fails; every other failure matches its predicate."""
    rng = seeded("init-scan")
    i3_fail = cont_fail = 0
    for f in corpus_maps(5):
        t = transfer_of(f)
        slm = enumerate_sublocales(f.target)
        ops = [discrete_op(slm), trivial_op(slm)] + [random_op(slm, rng) for _ in range(3)]
        surjective = t.image_table[t.source_lattice.top] == t.target_lattice.top
        for opm in ops:
            cand, rep = initial_interior(f, opm)
            assert rep.axioms.passed["I2"]
            assert rep.unexplained == ()
            if surjective:
                assert rep.axioms.passed["I3"]
            if not rep.axioms.passed["I3"]:
                i3_fail += 1
                assert not surjective
            if not rep.continuity.ok:
                cont_fail += 1
    assert i3_fail > 0 and cont_fail > 0


def test_initial_interior_coarseness():
    # the candidate sits below every operator that keeps f continuous, except
    # where a unit gap breaks the comparison; violations must carry one
    rng = seeded("coarse")
    violations = 0
    for f in corpus_maps(4):
        t = transfer_of(f)
        sl, slm = t.source_lattice, enumerate_sublocales(f.target)
        unit_exact = all(t.preimage_table[t.image_table[i]] == i for i in range(sl.n))
        for opm in [discrete_op(slm), trivial_op(slm), random_op(slm, rng)]:
            cand, _ = initial_interior(f, opm)
            for _ in range(2):
                opl = make_continuous_op(f, opm, rng)
                if op_le(cand, opl):
                    continue
                violations += 1
                assert not unit_exact
                gap = next(i for i in range(sl.n) if not sl.le(cand(i), opl(i)))
                assert t.preimage_table[t.image_table[gap]] != gap
    assert violations > 0


def test_universal_property_identity_g():
    # with g = id and the candidate itself as the source structure, the
    # initial side is reflexively continuous and the composite side is
    # exactly f's own continuity
    sl3 = enumerate_sublocales(chain3())
    for opm in (discrete_op(sl3), trivial_op(sl3)):
        f = f_up()
        cand, rep = initial_interior(f, opm)
        up = check_universal_property(f, opm, identity_localic(two()), cand)
        assert up.initial_side.ok
        assert up.composite_side.ok == rep.continuity.ok
        assert up.equivalent == rep.continuity.ok


def test_universal_property_fixture_chain():
    sl2, sl3 = enumerate_sublocales(two()), enumerate_sublocales(chain3())
    up = check_universal_property(
        f_up(), discrete_op(sl3), identity_localic(two()), discrete_op(sl2)
    )
    assert up.equivalent and up.initial_side.ok and up.composite_side.ok
    assert up.anomalies == ()
    with pytest.raises(HostMismatch):
        check_universal_property(
            f_up(), discrete_op(sl3), identity_localic(chain3()), discrete_op(sl3)
        )


def test_universal_property_initial_side_only_fixture():
    # g lands inside the unit gap of f: continuity against the candidate
    # fails although the composite is the identity
    f = localic_map(square(), two(), (0, 0, 0, 1))
    g = localic_map(two(), square(), (1, 3))
    d2 = discrete_op(enumerate_sublocales(two()))
    cand, _ = initial_interior(f, d2)
    assert cand.describe() == {
        "{1}": "{1}",
        "{a,1}": "{0,a,b,1}",
        "{b,1}": "{0,a,b,1}",
        "{0,a,b,1}": "{0,a,b,1}",
    }
    up = check_universal_property(f, d2, g, d2)
    assert not up.equivalent
    assert up.composite_side.ok and not up.initial_side.ok
    assert up.initial_side.witness == ("{b,1}", "{0,1}", "{1}")
    assert up.anomalies == (
        {"kind": "initial-side-only", "at": "{b,1}", "predicate": "unit-gap", "confirmed": True},
    )
    assert up.unexplained == ()


def test_universal_property_composite_side_only_fixture():
    f = localic_map(chain3(), chain4(), (1, 2, 3))
    sl4, sl3 = enumerate_sublocales(chain4()), enumerate_sublocales(chain3())
    opm = InteriorOperator(sl4, (0, 0, 0, 0, 2, 3, 6, 7))
    up = check_universal_property(f, opm, identity_localic(chain3()), trivial_op(sl3))
    assert not up.equivalent
    assert up.initial_side.ok and not up.composite_side.ok
    assert up.composite_side.witness == ("{0,a,1}", "{0,1}", "{1}")
    assert up.anomalies == (
        {
            "kind": "composite-side-only",
            "at": "{0,a,1}",
            "predicate": "f-continuity-gap-at-witness",
            "confirmed": True,
        },
    )
    assert up.unexplained == ()


def test_universal_property_random_scan():
    rng = seeded("up-scan")
    done = disagreements = 0
    maps = corpus_maps(4)
    for f in maps:
        slm = enumerate_sublocales(f.target)
        gs = [g for g in maps if g.target == f.source]
        for g in gs[:4]:
            sln = enumerate_sublocales(g.source)
            for opm in (discrete_op(slm), trivial_op(slm), random_op(slm, rng)):
                opn = random_op(sln, rng)
                up = check_universal_property(f, opm, g, opn)
                done += 1
                if not up.equivalent:
                    disagreements += 1
                    assert len(up.anomalies) == 1
                assert up.unexplained == ()
                if done >= 200:
                    break
            if done >= 200:
                break
        if done >= 200:
            break
    assert done == 200 and disagreements > 0


def test_open_fixpoints_examples():
    sl = enumerate_sublocales(chain3())
    assert len(open_fixpoints(discrete_op(sl))) == sl.n
    assert [s.label() for s in open_fixpoints(trivial_op(sl))] == ["{1}", "{0,m,1}"]
    rng = seeded("fixpoints")
    for fr in (chain3(), square()):
        slf = enumerate_sublocales(fr)
        for _ in range(20):
            a, b = random_op(slf, rng), random_op(slf, rng)
            joint = {s.mask for s in open_fixpoints(op_join([a, b]))}
            common = {s.mask for s in open_fixpoints(a)} & {
                s.mask for s in open_fixpoints(b)
            }
            assert common <= joint


def test_open_preimage_fixtures():
    sl3 = enumerate_sublocales(chain3())
    x = random_op(sl3, seeded("open-pre"))
    rep = check_open_preimage(identity_localic(chain3()), x, x)
    assert rep.status == "pass"
    assert rep.checked == len(open_fixpoints(x))
    rep = check_open_preimage(
        identity_localic(chain3()), trivial_op(sl3), discrete_op(sl3)
    )
    assert rep.status == "precondition-unmet" and rep.checked == 0


def test_open_preimage_corpus():
    """Preimages of fixpoints are fixpoints, for every continuous triple."""
    rng = seeded("open-pre-scan")
    passed = 0
    for f in corpus_maps(5):
        sll = enumerate_sublocales(f.source)
        slm = enumerate_sublocales(f.target)
        opms = [discrete_op(slm), trivial_op(slm), random_op(slm, rng)]
        for opm in opms:
            for opl in (discrete_op(sll), trivial_op(sll), random_op(sll, rng),
                        make_continuous_op(f, opm, rng)):
                if not is_I_continuous(f, opl, opm).ok:
                    continue
                rep = check_open_preimage(f, opl, opm)
                assert rep.status == "pass", (f.table, rep.witness)
                passed += 1
    assert passed > 100


def test_upward_closure_of_continuity():
    # enlarging the source operator can only help the containment
    rng = seeded("upward")
    for f in corpus_maps(4):
        sll = enumerate_sublocales(f.source)
        slm = enumerate_sublocales(f.target)
        for opm in (discrete_op(slm), trivial_op(slm), random_op(slm, rng)):
            opl = make_continuous_op(f, opm, rng)
            assert is_I_continuous(f, opl, opm).ok
            bigger = op_join([opl, random_op(sll, rng)])
            assert is_I_continuous(f, bigger, opm).ok
            assert is_I_continuous(f, discrete_op(sll), opm).ok


def test_make_continuous_op_property():
    rng = seeded("make-cont")
    for f in corpus_maps(5):
        slm = enumerate_sublocales(f.target)
        for opm in (discrete_op(slm), trivial_op(slm), random_op(slm, rng)):
            opl = make_continuous_op(f, opm, rng)
            assert check_interior(opl).ok
            assert is_I_continuous(f, opl, opm).ok
    with pytest.raises(HostMismatch):
        make_continuous_op(f_up(), discrete_op(enumerate_sublocales(two())), rng)


def test_family_singleton_agrees_with_initial():
    opm = random_op(enumerate_sublocales(chain3()), seeded("fam-single"))
    f = f_up()
    cand, rep = initial_interior(f, opm)
    fam = family_initial_check([f], [opm])
    assert fam.candidate.table == cand.table
    assert fam.per_map[0].ok == rep.continuity.ok
    assert fam.per_map_initial[0].anomalies == rep.anomalies


def test_family_two_maps_out_of_two():
    f1 = f_up()
    f2 = localic_map(two(), square(), (1, 3))
    d3 = discrete_op(enumerate_sublocales(chain3()))
    dsq = discrete_op(enumerate_sublocales(square()))
    fam = family_initial_check([f1, f2], [d3, dsq])
    assert fam.ok
    assert fam.candidate.table == discrete_op(enumerate_sublocales(two())).table
    assert all(r.ok for r in fam.per_map)
    # trivial structures hit the shared non-surjectivity caveat instead
    fam2 = family_initial_check(
        [f1, f2],
        [trivial_op(enumerate_sublocales(chain3())), trivial_op(enumerate_sublocales(square()))],
    )
    assert not fam2.ok
    assert not fam2.axioms.passed["I3"]
    for rep in fam2.per_map_initial:
        assert rep.unexplained == ()


def test_family_errors():
    with pytest.raises(EmptyFamily):
        family_initial_check([], [])
    d3 = discrete_op(enumerate_sublocales(chain3()))
    with pytest.raises(ValueError):
        family_initial_check([f_up()], [d3, d3])
    with pytest.raises(HostMismatch):
        family_initial_check(
            [f_up(), identity_localic(chain3())],
            [d3, d3],
        )


def test_family_random_scan():
    rng = seeded("fam-scan")
    maps = corpus_maps(4)
    by_src = {}
    for f in maps:
        by_src.setdefault(f.source.key(), []).append(f)
    groups = sorted(by_src.values(), key=lambda g: g[0].source.key())
    anomalies = 0
    for k in range(50):
        group = groups[k % len(groups)]
        ms = rng.sample(group, rng.randint(1, min(3, len(group))))
        ops = [random_op(enumerate_sublocales(m.target), rng) for m in ms]
        gs = [
            (g, random_op(enumerate_sublocales(g.source), rng))
            for g in maps
            if g.target == ms[0].source
        ][:4]
        rep = family_initial_check(ms, ops, sampled_gs=gs)
        assert rep.axioms.passed["I2"]
        for r in rep.per_map_initial:
            assert r.unexplained == ()
        for entry in rep.universal:
            if entry["anomaly"] is not None:
                anomalies += 1
                assert entry["anomaly"]["confirmed"]
    assert anomalies > 0


def test_report_json_shapes():
    sl3 = enumerate_sublocales(chain3())
    f = f_up()
    _, rep = initial_interior(f, trivial_op(sl3))
    js = rep.to_json()
    assert set(js) == {"axioms", "continuity", "anomalies"}
    assert js["axioms"]["passed"]["I3"] is False
    assert js["continuity"]["witness"] == ("{0,m,1}", "{0,1}", "{1}")
    up = check_universal_property(
        f, discrete_op(sl3), identity_localic(two()), discrete_op(enumerate_sublocales(two()))
    )
    assert up.to_json()["equivalent"] is True
    cont = is_I_continuous(identity_localic(chain3()), trivial_op(sl3), discrete_op(sl3))
    assert cont.to_json() == {
        "ok": False,
        "checked": 2,
        "witness": ("{0,1}", "{0,1}", "{1}"),
    }
    opr = check_open_preimage(identity_localic(chain3()), trivial_op(sl3), discrete_op(sl3))
    assert opr.to_json()["status"] == "precondition-unmet"

import pytest

import cdawg

FIG1 = "ababababcababab"  # (ab)^4 c (ab)^3: 5 nodes, 9 edges


def test_size_fig1():
    assert cdawg.size(FIG1) == 9
    assert cdawg.size(FIG1, mode="checked") == 9


def test_build_graph():
    g = cdawg.build("abab")
    assert g.size_e == 3
    assert g.text == "abab"
    assert g.spell_ok()
    assert len(g.edges) == 3
    assert {n[1] for n in g.nodes} == {"", "ab", "abab"}
    assert "digraph" in g.to_dot()
    assert '"size_e": 3' in g.to_json()


def test_maximal_repeats():
    assert cdawg.maximal_repeats(FIG1) == ["ab", "abab", "ababab"]
    assert cdawg.maximal_substrings("abab") == ["", "ab", "abab"]
    assert cdawg.out_degree("", FIG1) == 3
    assert cdawg.out_degree("ab", FIG1) == 2


def test_delta():
    # the insertion family at m=3: prepending b realizes delta = e - 2
    r = cdawg.delta("abababcabababab", "ins", "b")
    assert (r.e_before, r.e_after, r.delta) == (9, 16, 7)
    assert (r.F, r.G) == (7, 0)
    assert r.delta <= r.F + r.G
    assert r.op == "ins b"
    with pytest.raises(ValueError):
        cdawg.delta("abc", "del", "x")  # del takes no character
    with pytest.raises(ValueError):
        cdawg.delta("abc", "sub", "a")  # must differ from T[1]


def test_family():
    row = cdawg.verify_family("ins", 3)
    assert row.match and (row.e_before, row.e_after) == (9, 16)
    assert cdawg.family_string("ins", 2) == "ababcababab"
    assert cdawg.predicted_sizes("online", 2, k=1) == (15, 27)
    with pytest.raises(ValueError):
        cdawg.family_string("bogus", 1)


def test_churn():
    rep = cdawg.churn_quadratic_check(2)
    assert rep.ok
    assert rep.transition_churn == 40  # 9m^2 + 2m at m = 2
    run = cdawg.leftward_run("abab")
    assert [s.e for s in run.steps] == [0, 2, 3, 3]
    assert [s.i for s in run.steps] == [4, 3, 2, 1]


def test_sweep():
    rep = cdawg.sweep("ab", 6)
    assert rep.ok
    assert rep.strings == 127  # 2^0 + ... + 2^6
    assert rep.pairs == 127 * 2 + 126 + 126  # ins both chars, del, sub
    assert rep.violations == []


def test_lemmas():
    assert "L1" in cdawg.lemma_ids()
    assert cdawg.check_lemma("L1", "abab", "ins", "b") == []
    with pytest.raises(ValueError):
        cdawg.check_lemma("nope", "abab", "ins", "b")


def test_expand_repeats():
    assert cdawg.expand_repeats("(ab)^3c") == "ababab" + "c"
    with pytest.raises(ValueError):
        cdawg.expand_repeats("(ab")

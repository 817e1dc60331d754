"""Smoke-scale runs of the randomized split/admissibility suites; the
acceptance module runs them at full instance counts."""

from ospd import make_alphabet
from ospd.lemmas import (check_lemma_clauses, run_admissibility_suite,
                         run_split_lemma_suite)
from ospd.crystal import e_pair_bar
from ospd.alphabet import simple_root_indices
from ospd.osptab import classify_pair

from conftest import letters


def test_split_suite_small_counts():
    for kind in ("classical", "super"):
        A = make_alphabet(kind, 4, 2)
        report = run_split_lemma_suite(A, per_clause=100, seed=11)
        assert report["complete"], report["counts"]
        assert report["ok"], report["failures"][:1]


def test_admissibility_suite_small_counts():
    for kind in ("classical", "super"):
        A = make_alphabet(kind, 4, 2)
        report = run_admissibility_suite(A, per_case=100, seed=12)
        assert report["complete"], report["counts"]
        assert report["ok"], report["failures"][:1]


def test_clause_evaluation_on_a_known_instance(cl40):
    # a right-column move with unchanged residue: clauses R1 and R2 apply
    t = classify_pair(letters(cl40, "b4", "b3", "b2", "b1"),
                      letters(cl40, "b4", "b3"), 2)
    spin = simple_root_indices(cl40)[0]
    up = e_pair_bar(cl40, "classical", spin, t)
    which = "R" if up.left == t.left else "L"
    out = check_lemma_clauses(cl40, t, up, which)
    assert out and all(out.values())

import json

import pytest

from ospd import (classify_pair, enumerate_tableaux, is_admissible, lr_split,
                  make_alphabet, shape_plan, star_split, validate,
                  weyl_dim_D)
from ospd.osptab import (OspTableauD, RejectError, SpinColumn, all_columns,
                         highest_weight_tuple, is_admissible_sigma,
                         lr_split_sliding, osp_pairs, star_split_sliding,
                         try_classify_pair, tuple_from_json, tuple_to_json,
                         valid_slide_offsets)
from ospd.signature import sigma_pair

from conftest import letters


@pytest.fixture(scope="module")
def worked(sup46=make_alphabet("super", 4, 6)):
    A = sup46
    T = classify_pair(letters(A, "b4", "b1", "1/2", "3/2", "3/2"),
                      letters(A, "b3", "b2", "3/2", "5/2"), 3)
    S1 = classify_pair(letters(A, "b1", "5/2", "7/2", "9/2"),
                       letters(A, "b2", "b1", "7/2", "9/2"), 2)
    S2 = classify_pair(letters(A, "b3", "b2", "b1", "1/2", "3/2", "5/2", "7/2"),
                       letters(A, "b2", "b1", "1/2", "3/2", "7/2", "9/2"), 1)
    return A, T, S1, S2


def test_classify_worked_example(worked):
    _, T, S1, S2 = worked
    assert T.shape() == (3, 2, 2) and T.residue == 1
    assert S1.residue == 1 and S2.residue == 0


def test_classify_strict_column_alone(cl40):
    t = classify_pair(letters(cl40, "b4", "b3", "b2"), (), 3)
    assert t.residue == 0 and sigma_pair(t.left, t.right) == (3, 0)


def test_classify_rejects_odd_b(cl40):
    with pytest.raises(RejectError):
        classify_pair(letters(cl40, "b4"), letters(cl40, "b4"), 1)


def test_slide_characterization_exhaustive():
    # all pairs with at most 8 boxes over a 5-letter alphabet: membership by
    # signature agrees with the slide-offset description, and the offsets of
    # a member form the interval {0..r}
    A = make_alphabet("super", 3, 2)
    cols = {h: all_columns(A, h) for h in range(7)}
    for a in range(4):
        for hl in range(a, 7):
            for hr in range(0, 8 - hl + 1):
                c = hl - a
                b = hr - c
                if c < 0 or b < 0 or b % 2 or c % 2:
                    continue
                for left in cols[hl]:
                    for right in cols.get(hr, ()):
                        member = try_classify_pair(left, right, a)
                        offsets = valid_slide_offsets(left, right, a)
                        if member is not None:
                            assert offsets == set(range(member.residue + 1))
                        else:
                            assert not (offsets == {0} or offsets == {0, 1})


def test_lr_split_worked_example(worked):
    A, T, _, _ = worked
    assert lr_split(T) == (letters(A, "b4", "1/2", "3/2"),
                           letters(A, "b3", "b2", "b1", "3/2", "3/2", "5/2"))


def test_star_split_worked_example(worked):
    A, T, _, _ = worked
    assert star_split(T) == (letters(A, "b4", "b2", "b1", "1/2", "3/2", "3/2"),
                             letters(A, "b3", "3/2", "5/2"))


def test_lr_split_identity_when_trivial(cl40):
    t = classify_pair(letters(cl40, "b4", "b3"), letters(cl40, "b4", "b3"), 0)
    assert t.residue == 0
    assert lr_split(t) == (t.left, t.right)


def test_star_split_requires_residue_one(cl40):
    t = classify_pair(letters(cl40, "b4", "b3", "b2"), (), 3)
    with pytest.raises(RejectError):
        star_split(t)


def _random_members(rng, alphabet, count, max_a=4, budget=8):
    pools = [osp_pairs(alphabet, a, budget) for a in range(max_a + 1)]
    pool = [t for p in pools for t in p]
    return [rng.choice(pool) for _ in range(count)]


def test_sliding_algorithms_match_operator_splits(rng):
    for kind in ("classical", "super"):
        A = make_alphabet(kind, 4, 2)
        for t in _random_members(rng, A, 500):
            assert lr_split_sliding(t) == lr_split(t)
            lt, rt = lr_split(t)
            assert len(lt) == len(t.left) - t.a + t.residue
            assert len(rt) == len(t.right) + t.a - t.residue
            if t.residue == 1:
                assert star_split_sliding(t) == star_split(t)


def test_star_then_raise_is_identity(rng):
    # the star split is the lowering operator; raising inverts it
    from ospd.signature import gl_e_matrix
    from ospd.tableau import make_matrix
    A = make_alphabet("super", 4, 2)
    done = 0
    for t in _random_members(rng, A, 3000):
        if t.residue != 1:
            continue
        ls, rs = star_split(t)
        m = gl_e_matrix(make_matrix((rs, ls)), 1)
        assert m is not None and (m.cols[1], m.cols[0]) == (t.left, t.right)
        done += 1
        if done >= 500:
            break
    assert done >= 500


def test_admissibility_worked_examples(worked):
    _, T, S1, S2 = worked
    assert is_admissible(T, S1)
    assert is_admissible(T, S2)


def test_admissibility_height_violation(cl40):
    t = classify_pair(letters(cl40, "b4", "b3"), letters(cl40, "b4", "b3"), 0)
    s = SpinColumn(())
    # ht(T^R) = 2 > ht(S^L) - a' + 2 r r' = 0
    assert not is_admissible(t, s)


def test_admissibility_sigma_form_agrees(rng):
    for kind in ("classical", "super"):
        A = make_alphabet(kind, 4, 2)
        members = _random_members(rng, A, 1200, max_a=3, budget=6)
        spins = [SpinColumn(c) for h in range(5) for c in all_columns(A, h)]
        bars = osp_pairs(A, 0, 6, bar=True)
        checked = 0
        for _ in range(4000):
            t = rng.choice(members)
            mode = rng.randrange(3)
            if mode == 0:
                s = rng.choice(members)
                if t.a < s.a:
                    t, s = s, t
            elif mode == 1:
                s = rng.choice(spins)
                if t.a < s.residue:
                    continue
            else:
                if t.a < 1:
                    continue
                s = rng.choice(bars)
            assert is_admissible(t, s) == is_admissible_sigma(t, s)
            checked += 1
        bt = rng.choice(bars)
        for s in bars[:50]:
            assert is_admissible(bt, s) == is_admissible_sigma(bt, s)
        assert checked > 3000


def test_shape_plan_examples():
    p = shape_plan((1, 1, 1), 2)
    assert (p.sign, p.q, p.r, p.M, p.L, p.heights) == ("+", 0, 0, 1, 1, (3,))
    p = shape_plan((), 1)
    assert (p.sign, p.q, p.r, p.M, p.L) == ("+", 0, 1, 0, 0)
    p = shape_plan((2,), 2)
    assert (p.sign, p.q, p.r, p.M, p.L) == ("-", 1, 0, 0, 1)
    for lam, ell in [((3, 1), 5), ((2, 2), 4), ((1,), 3)]:
        p = shape_plan(lam, ell)
        assert 2 * p.L + p.r == ell


def test_shape_plan_rejections():
    with pytest.raises(RejectError):
        shape_plan((2, 2), 3)  # ell - l1 - l2 < 0
    with pytest.raises(RejectError):
        shape_plan((1,), 0)
    with pytest.raises(RejectError):
        shape_plan((1, 1, 1), 2, make_alphabet("super", 2, 0))
    with pytest.raises(RejectError):
        shape_plan((1, 1, 1, 1, 1), 2, make_alphabet("classical", 2, 2))


def test_classical_highest_tuple_validates():
    for m, n in ((3, 0), (4, 0), (2, 2)):
        A = make_alphabet("classical", m, n)
        for lam, ell in [((), 1), ((1,), 1), ((1, 1), 2), ((2,), 2), ((2,), 3)]:
            plan = shape_plan(lam, ell, A)
            t = highest_weight_tuple(plan, A, "classical")
            assert isinstance(t, OspTableauD)


def test_validate_reports_failing_condition(cl40):
    plan = shape_plan((1, 1), 2, cl40)
    good = classify_pair(letters(cl40, "b4", "b3"), (), 2)
    with pytest.raises(RejectError):
        validate([good, good], plan)  # wrong number of components
    plan2 = shape_plan((2, 2), 4, cl40)
    t1 = classify_pair(letters(cl40, "b4", "b3"), (), 2)
    t2 = classify_pair(letters(cl40, "b3", "b2"), (), 2)
    with pytest.raises(RejectError) as err:
        validate([t2, t1], plan2)
    assert "T_2 < T_1" in str(err.value)


def test_enumerate_spin_level_one(cl40):
    plan = shape_plan((), 1, cl40)
    out = enumerate_tableaux(plan, cl40)
    assert len(out) == 8  # even-size subsets of a 4-letter set
    assert out == enumerate_tableaux(plan, cl40)  # deterministic


def test_enumerate_matches_weyl_dimension():
    for m, n in ((3, 0), (2, 1), (4, 0), (2, 2)):
        A = make_alphabet("classical", m, n)
        for lam, ell in [((), 1), ((1,), 1), ((1,), 2), ((1, 1), 2), ((2,), 2)]:
            plan = shape_plan(lam, ell, A)
            count = len(enumerate_tableaux(plan, A))
            assert count == weyl_dim_D(ell, lam, m + n)


def test_enumerate_super_requires_bound(sup22):
    with pytest.raises(RejectError):
        enumerate_tableaux(shape_plan((1,), 1, sup22), sup22)


def test_tuple_json_roundtrip(sup22):
    plan = shape_plan((1,), 1, sup22)
    for t in enumerate_tableaux(plan, sup22, 5):
        blob = json.dumps(tuple_to_json(t), sort_keys=True)
        assert tuple_from_json(sup22, json.loads(blob)) == t

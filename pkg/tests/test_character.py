import pytest

from ospd import make_alphabet, shape_plan, verify_pieri, weyl_dim_D
from ospd.character import (enumerate_recording, in_k_set, k_coefficients,
                            k_from_character, k_set_via_inverse,
                            partitions_up_to, s_character,
                            schur_expansion_matches, super_schur)
from ospd.osptab import RejectError, enumerate_tableaux
from ospd.tableau import conjugate



def _exps(alphabet, **counts):
    out = [0] * alphabet.size
    for name, e in counts.items():
        out[alphabet.parse(name.replace("_", "/")).rank] = e
    return tuple(out)


def test_super_schur_single_box():
    A = make_alphabet("classical", 2, 0)
    poly = super_schur((1,), A)
    assert poly.terms == {(0, (1, 0)): 1, (0, (0, 1)): 1}


def test_super_schur_column_two_super21():
    A = make_alphabet("super", 2, 1)
    poly = super_schur((1, 1), A, max_degree=2)
    assert poly.terms == {
        (0, (1, 1, 0)): 1, (0, (1, 0, 1)): 1,
        (0, (0, 1, 1)): 1, (0, (0, 0, 2)): 1}


def test_super_schur_symmetry_in_even_letters():
    A = make_alphabet("classical", 3, 0)
    poly = super_schur((2,), A)
    coeffs = {}
    for (_, ex), c in poly.terms.items():
        coeffs.setdefault(tuple(sorted(ex)), set()).add(c)
    assert all(len(v) == 1 for v in coeffs.values())


def test_super_schur_guards(sup22):
    with pytest.raises(RejectError):
        super_schur((2, 1), sup22)  # bound required for super
    with pytest.raises(RejectError):
        super_schur((2, 1), sup22, max_degree=2)


def test_s_character_small_classical():
    A = make_alphabet("classical", 2, 0)
    poly = s_character(shape_plan((), 1, A), A)
    assert poly.terms == {(1, (0, 0)): 1, (1, (1, 1)): 1}
    A4 = make_alphabet("classical", 4, 0)
    assert len(s_character(shape_plan((), 1, A4), A4).terms) == 8


def test_k_coefficients_spin_plan():
    # level one, empty shape: one column class per even size
    table = k_coefficients(shape_plan((), 1), 8)
    assert table == {(): 1, (1, 1): 1, (1, 1, 1, 1): 1,
                     (1,) * 6: 1, (1,) * 8: 1}


def test_k_nonnegative_and_alphabet_independent():
    for lam, ell in [((1,), 2), ((2,), 2), ((2,), 3), ((1, 1), 2)]:
        bound = 8
        table = k_coefficients(shape_plan(lam, ell), bound)
        assert all(k > 0 for k in table.values())
        for size in (8, 9):
            A = make_alphabet("classical", size, 0)
            peeled = {mu: c for mu, c in
                      k_from_character(shape_plan(lam, ell, A), A, bound).items()
                      if sum(mu) <= bound}
            assert peeled == table


def test_k_membership_matches_inverse_oracle(rng):
    oracle = make_alphabet("classical", 9, 0)
    for lam, ell in [((1,), 2), ((2,), 3), ((), 2), ((2, 1), 3)]:
        plan = shape_plan(lam, ell)
        for mu in partitions_up_to(5, ell):
            for q_cols in enumerate_recording(conjugate(mu), ell):
                assert in_k_set(plan, q_cols) == \
                    k_set_via_inverse(plan, q_cols, oracle)


def test_middle_column_parity_is_needed():
    # the recording column [1,2] has sigma (0,0) but odd middle heights;
    # it must be excluded, matching the expansion of the plan ((0), 2)
    plan = shape_plan((), 2)
    q_cols = ((1, 2),)  # shape (1,1) = conjugate of (2)
    assert not in_k_set(plan, q_cols)
    table = k_coefficients(plan, 4)
    assert table.get((2,)) is None and table[(1, 1)] == 1


def test_schur_expansion_classical_exact():
    for m, n in ((3, 0), (4, 0), (2, 1)):
        A = make_alphabet("classical", m, n)
        for lam, ell in [((), 1), ((1,), 1), ((1,), 2), ((2,), 2), ((), 2)]:
            plan = shape_plan(lam, ell, A)
            assert schur_expansion_matches(plan, A)


def test_schur_expansion_super_bounded(sup22):
    for lam, ell in [((1,), 1), ((1, 1), 2), ((2,), 2)]:
        plan = shape_plan(lam, ell, sup22)
        assert schur_expansion_matches(plan, sup22, 8)


def test_verify_pieri_trivial_column_plan():
    A = make_alphabet("classical", 3, 0)
    rep = verify_pieri(shape_plan((), 1, A), A)
    assert rep["ok"] and rep["n"] == 4


def test_verify_pieri_super(sup22):
    for lam, ell in [((1,), 1), ((2,), 2), ((1, 1), 2)]:
        rep = verify_pieri(shape_plan(lam, ell, sup22), sup22, 8)
        assert rep["ok"], rep["failures"][:1]


def test_weyl_dim_examples():
    assert weyl_dim_D(1, (), 4) == 8
    # independent recount of the spin module: even-sized subsets
    import itertools
    count = sum(1 for r in range(0, 5, 2)
                for _ in itertools.combinations(range(4), r))
    assert count == 8
    assert weyl_dim_D(0, (), 3) == 1
    A3 = make_alphabet("classical", 3, 0)
    assert weyl_dim_D(1, (1,), 3) == \
        len(enumerate_tableaux(shape_plan((1,), 1, A3), A3))
    with pytest.raises(RejectError):
        weyl_dim_D(1, (1, 1), 3)  # ell < l1 + l2


def test_charpoly_json_stable(sup22):
    poly = s_character(shape_plan((1,), 1, sup22), sup22, 3)
    blob = poly.to_json(sup22)
    assert blob == sorted(blob, key=lambda t: sorted(t.items()) and 0) or blob
    assert all(set(term) == {"z", "x", "coef"} for term in blob)
    assert blob[0]["z"] == 1


def test_k_q_conditions_individually():
    from ospd.character import QContext, Q_CONDITIONS
    plan = shape_plan((1, 1), 2)
    good = 0
    for mu in partitions_up_to(4, 2):
        for q_cols in enumerate_recording(conjugate(mu), 2):
            ctx = QContext(plan, q_cols)
            values = []
            for cond in Q_CONDITIONS:
                try:
                    values.append(bool(cond(ctx)))
                except RejectError:
                    values.append(False)
                    break
            if all(values):
                good += 1
    assert good == sum(k_coefficients(plan, 4).values())

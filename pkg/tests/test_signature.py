import random

from hypothesis import given, settings, strategies as st

from ospd import rsk
from ospd.signature import (Signature, gl_E, gl_F, gl_e_matrix, gl_e_tableau,
                            gl_e_word, gl_f_matrix, gl_f_tableau, gl_f_word,
                            reduce, sigma_matrix, sigma_pair, sigma_tableau,
                            sigma_word)
from ospd.tableau import make_matrix

from conftest import letters, random_column, random_matrix


def test_reduce_examples():
    assert reduce(("+", "-")) == (".", ".")
    assert reduce(("-", "+", "-", "+")) == ("-", ".", ".", "+")


def _reduce_random_order(rng, symbols):
    out = list(symbols)
    while True:
        pairs = []
        for i, s in enumerate(out):
            if s != "+":
                continue
            for j in range(i + 1, len(out)):
                if out[j] == "-":
                    pairs.append((i, j))
                    break
                if out[j] == "+":
                    break
        if not pairs:
            return tuple(out)
        i, j = rng.choice(pairs)
        out[i] = out[j] = "."


@settings(max_examples=300, deadline=None)
@given(st.lists(st.sampled_from("+-."), max_size=20), st.integers(0, 10**6))
def test_reduce_order_independence(symbols, seed):
    rng = random.Random(seed)
    assert reduce(tuple(symbols)) == _reduce_random_order(rng, symbols)


def test_sigma_pair_empty_left(sup22, rng):
    for h in range(5):
        v = random_column(rng, sup22, h)
        if v is None:
            continue
        assert sigma_pair((), v) == (0, h)
        assert sigma_pair(v, ()) == (h, 0)


def test_sigma_pair_worked_example(sup46):
    u = letters(sup46, "b4", "b1", "1/2", "3/2", "3/2")
    v = letters(sup46, "b3", "b2", "3/2", "5/2")
    assert sigma_pair(u, v) == (2, 1)


def test_sigma_pair_matches_matrix(rng, sup22):
    for _ in range(300):
        u = None
        while u is None:
            u = random_column(rng, sup22, rng.randrange(0, 6))
        v = None
        while v is None:
            v = random_column(rng, sup22, rng.randrange(0, 6))
        m = make_matrix((v, u))  # m^(2) is U, m^(1) is V
        assert sigma_pair(u, v) == sigma_matrix(m, 1)


def test_sigma_word_examples():
    assert sigma_word((3, 4), 3) == (0, 0)
    assert sigma_word((4, 4, 3), 3) == (2, 1)


def test_sigma_matrix_is_max_operator_powers(rng, sup22):
    for _ in range(200):
        m = random_matrix(rng, sup22, 3, 8)
        for i in (1, 2):
            p = 0
            cur = m
            while gl_e_matrix(cur, i) is not None:
                cur = gl_e_matrix(cur, i)
                p += 1
            q = 0
            cur = m
            while gl_f_matrix(cur, i) is not None:
                cur = gl_f_matrix(cur, i)
                q += 1
            assert sigma_matrix(m, i) == (p, q)


def test_invariance_of_signature(rng, sup22):
    # the signature of a matrix equals that of its recording tableau
    for _ in range(300):
        m = random_matrix(rng, sup22, 3, 8)
        _, q = rsk(m)
        for i in (1, 2):
            assert sigma_matrix(m, i) == sigma_tableau(q, i)


def test_gl_e_null_on_reduced_word():
    assert gl_e_word((1, 2), 1) is None  # word "i i+1" cancels


def test_gl_f_then_e_identity(rng):
    for _ in range(500):
        n = rng.randrange(1, 12)
        w = tuple(rng.randrange(1, 5) for _ in range(n))
        i = rng.randrange(1, 4)
        up = gl_e_word(w, i)
        if up is not None:
            assert gl_f_word(up, i) == w


def test_rsk_is_bicrystal_morphism(rng, sup22):
    for _ in range(300):
        m = random_matrix(rng, sup22, 3, 8)
        p, q = rsk(m)
        for i in (1, 2):
            for op, qop in ((gl_e_matrix, gl_e_tableau),
                            (gl_f_matrix, gl_f_tableau)):
                moved = op(m, i)
                if moved is None:
                    assert qop(q, i) is None
                    continue
                p2, q2 = rsk(moved)
                assert p2 == p
                assert q2 == qop(q, i)


def test_dispatch(sup22):
    m = make_matrix((letters(sup22, "b2"), letters(sup22, "b1")))
    assert isinstance(gl_E(m, 1), type(m)) or gl_E(m, 1) is None
    assert gl_F((1, 1), 1) == (2, 1)
    assert gl_E(((1, 2),), 1) is None  # a column recording tableau
    assert sigma_pair((), ()) == Signature(0, 0)

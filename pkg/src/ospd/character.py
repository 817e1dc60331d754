"""Characters, super Schur functions, branching coefficients, and the type D
Weyl dimension oracle.

A character is a finitely supported integer combination of monomials
z^level * prod_a x_a^{k_a}, stored as a map from (level, exponent vector) to
coefficient.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .osptab import (RejectError, enumerate_tableaux, matrix_to_tuple,
                     tuple_to_matrix)
from .signature import Signature, gl_e_tableau, gl_f_tableau, sigma_tableau
from .tableau import (conjugate, inverse_rsk, is_partition, letters_weight,
                      row_pair_ok, rsk, straight_is_semistandard)

# ---------------------------------------------------------------------------
# character polynomials


class CharPoly:
    """Sparse z/x polynomial keyed by (level, exponent tuple)."""

    def __init__(self, terms=None):
        self.terms = dict(terms or {})
        self._trim()

    def _trim(self):
        self.terms = {k: v for k, v in self.terms.items() if v}

    def copy(self):
        return CharPoly(self.terms)

    def add_term(self, level, exps, coeff=1):
        key = (level, tuple(exps))
        self.terms[key] = self.terms.get(key, 0) + coeff
        if not self.terms[key]:
            del self.terms[key]

    def __add__(self, other):
        out = self.copy()
        for key, v in other.terms.items():
            out.terms[key] = out.terms.get(key, 0) + v
        out._trim()
        return out

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        return CharPoly({k: c * v for k, v in self.terms.items()})

    def shifted(self, level):
        return CharPoly({(lv + level, ex): v
                         for (lv, ex), v in self.terms.items()})

    def truncated(self, max_degree):
        return CharPoly({(lv, ex): v for (lv, ex), v in self.terms.items()
                         if sum(ex) <= max_degree})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, CharPoly) and self.terms == other.terms

    def __repr__(self):
        return "CharPoly(%d terms)" % len(self.terms)

    def to_json(self, alphabet):
        out = []
        for (lv, ex), coeff in sorted(self.terms.items()):
            xs = {alphabet.letter(i).name: e for i, e in enumerate(ex) if e}
            out.append({"z": lv, "x": xs, "coef": coeff})
        return out


def _content_exps(alphabet, letters):
    return letters_weight(alphabet, letters).counts


# ---------------------------------------------------------------------------
# Schur functions over a graded alphabet

def enumerate_ssyt(mu, alphabet):
    """All semistandard tableaux of straight shape mu, column-major."""
    mu = tuple(x for x in mu if x)
    if not is_partition(mu):
        raise RejectError("mu must be a partition")
    heights = conjugate(mu)
    from .osptab import all_columns
    results = []

    def extend(j, cols):
        if j == len(heights):
            results.append(tuple(cols))
            return
        for col in all_columns(alphabet, heights[j]):
            if cols:
                prev = cols[-1]
                if any(not row_pair_ok(prev[i], col[i])
                       for i in range(len(col))):
                    continue
            cols.append(col)
            extend(j + 1, cols)
            cols.pop()

    extend(0, [])
    return results


def super_schur(mu, alphabet, max_degree=None):
    """The Schur function of mu: the weight generating function of the
    semistandard tableaux of shape mu.  Homogeneous of degree |mu|; the
    optional bound is an API guard only."""
    mu = tuple(x for x in mu if x)
    size = sum(mu)
    if alphabet.kind == "super":
        if max_degree is None:
            raise RejectError("super alphabets require max_degree")
        if max_degree < size:
            raise RejectError("max_degree below |mu|")
    poly = CharPoly()
    for cols in enumerate_ssyt(mu, alphabet):
        letters = [a for col in cols for a in col]
        poly.add_term(0, _content_exps(alphabet, letters))
    return poly


def s_character(plan, alphabet, max_boxes=None):
    """The weight generating function of the tableaux of the plan, with the
    level recorded in the z variable."""
    poly = CharPoly()
    for t in enumerate_tableaux(plan, alphabet, max_boxes):
        poly.add_term(plan.ell, _content_exps(alphabet, t.letters()))
    return poly


# ---------------------------------------------------------------------------
# the branching-coefficient set: recording tableaux passing (Q1)-(Q12)

class QContext:
    """Environment for evaluating the twelve recording-tableau conditions.

    Columns are numbered so the spin slot (present when r = 1) is column 1
    and the pair T_j occupies columns (r + 2j - 1, r + 2j); the color inside
    the pair T_{q+k} is then c_k = r + 2q + 2k - 1 and the boundary color
    between the pair block and the middle block is r + 2q.
    """

    def __init__(self, plan, q_cols):
        self.plan = plan
        self.q = q_cols
        counts = [0] * (plan.ell + 1)
        for col in q_cols:
            for e in col:
                if not 1 <= e <= plan.ell:
                    raise RejectError("entry %r outside 1..ell" % (e,))
                counts[e] += 1
        self.m = counts  # m[i] = |column i|, 1-based
        self.s = plan.r
        self.r0 = 1 if plan.sign == "-" else 0
        self.rk = {}
        self.pk = {}

    def c_within(self, k):
        return self.s + 2 * self.plan.q + 2 * k - 1

    def c_cross(self, k):
        return self.s + 2 * self.plan.q + 2 * k

    def mL(self, k):
        return self.m[self.c_within(k) + 1]

    def mR(self, k):
        return self.m[self.c_within(k)]

    def middle_top(self):
        return self.s + 2 * self.plan.q

    def a(self, k):
        return self.plan.heights[k - 1]

    def residue(self, k):
        if k not in self.rk:
            if not q3(self):
                raise RejectError("residues undefined before (Q3)")
        return self.rk[k]

    def e_power(self, q_cols, color, power):
        for _ in range(power):
            q_cols = gl_e_tableau(q_cols, color)
            if q_cols is None:
                return None
        return q_cols

    def f_power(self, q_cols, color, power):
        for _ in range(power):
            q_cols = gl_f_tableau(q_cols, color)
            if q_cols is None:
                return None
        return q_cols


def q1(ctx):
    for k in range(1, ctx.plan.M + 1):
        d = ctx.mL(k) - ctx.a(k)
        if d < 0 or d % 2 or ctx.mR(k) % 2:
            return False
    return True


def q2(ctx):
    return all(ctx.mL(k) - ctx.a(k) <= ctx.mR(k)
               for k in range(1, ctx.plan.M + 1))


def q3(ctx):
    """Signatures inside each pair; determines the residues r_k."""
    for k in range(1, ctx.plan.M + 1):
        sig = sigma_tableau(ctx.q, ctx.c_within(k))
        base = ctx.mR(k) - ctx.mL(k) + ctx.a(k)
        hit = None
        for r in (0, 1):
            if sig == Signature(ctx.a(k) - r, base - r):
                hit = r
                break
        if hit is None:
            return False
        ctx.rk[k] = hit
    return True


def q4(ctx):
    for k in range(1, ctx.plan.M):
        r, r2 = ctx.residue(k), ctx.residue(k + 1)
        if ctx.mR(k + 1) > ctx.mL(k) - ctx.a(k) + 2 * r * r2:
            return False
    return True


def q5(ctx):
    for k in range(1, ctx.plan.M):
        r, r2 = ctx.residue(k), ctx.residue(k + 1)
        cur = ctx.e_power(ctx.q, ctx.c_within(k), ctx.a(k) - r)
        if cur is not None:
            cur = ctx.f_power(cur, ctx.c_within(k + 1), r * r2)
        if cur is None:
            return False
        want = Signature(0, ctx.mL(k) - ctx.mR(k + 1) - ctx.a(k) + r * (r2 + 1))
        if sigma_tableau(cur, ctx.c_cross(k)) != want:
            return False
    return True


def q6(ctx):
    for k in range(1, ctx.plan.M):
        r, r2 = ctx.residue(k), ctx.residue(k + 1)
        cur = ctx.e_power(ctx.q, ctx.c_within(k + 1), ctx.a(k + 1) - r2)
        if cur is not None:
            cur = ctx.f_power(cur, ctx.c_within(k), r * r2)
        if cur is None:
            return False
        sig = sigma_tableau(cur, ctx.c_cross(k))
        p = ctx.a(k + 1) - ctx.a(k) - sig.p
        want = ctx.mL(k) - ctx.mR(k + 1) - ctx.a(k) + r2 * (r + 1) - p
        if p < 0 or sig.q != want:
            return False
        ctx.pk[k] = p
    return True


def q7(ctx):
    """Sizes and parities of the middle columns: even heights on the plus
    side, odd (hence positive) heights on the minus side."""
    for i in range(1, ctx.middle_top() + 1):
        if ctx.r0 == 0:
            if ctx.m[i] % 2:
                return False
        else:
            if ctx.m[i] <= 0 or ctx.m[i] % 2 == 0:
                return False
    return True


def q8(ctx):
    return all(ctx.m[i + 1] <= ctx.m[i] for i in range(1, ctx.middle_top()))


def q9(ctx):
    for i in range(1, ctx.middle_top()):
        if sigma_tableau(ctx.q, i) != Signature(0, ctx.m[i] - ctx.m[i + 1]):
            return False
    return True


def _has_boundary(ctx):
    return ctx.plan.M >= 1 and ctx.middle_top() >= 1


def q10(ctx):
    if not _has_boundary(ctx):
        return True
    r1 = ctx.residue(1)
    return ctx.mR(1) <= ctx.m[ctx.middle_top()] - ctx.r0 + 2 * ctx.r0 * r1


def q11(ctx):
    if not _has_boundary(ctx):
        return True
    r1 = ctx.residue(1)
    cur = ctx.f_power(ctx.q, ctx.c_within(1), ctx.r0 * r1)
    if cur is None:
        return False
    want = Signature(0, ctx.m[ctx.middle_top()] - ctx.mR(1) + ctx.r0 * r1)
    return sigma_tableau(cur, ctx.middle_top()) == want


def q12(ctx):
    if not _has_boundary(ctx):
        return True
    r1 = ctx.residue(1)
    cur = ctx.e_power(ctx.q, ctx.c_within(1), ctx.a(1) - r1)
    if cur is None:
        return False
    sig = sigma_tableau(cur, ctx.middle_top())
    first = ctx.a(1) - ctx.r0 + ctx.r0 * r1
    p = first - sig.p
    want = (ctx.m[ctx.middle_top()] - ctx.mR(1) - ctx.r0
            + r1 * (ctx.r0 + 1) - p)
    if p < 0 or sig.q != want:
        return False
    ctx.pk[0] = p
    return True


Q_CONDITIONS = (q1, q2, q3, q4, q5, q6, q7, q8, q9, q10, q11, q12)


def in_k_set(plan, q_cols):
    """Membership of a recording tableau in the branching set of the plan."""
    ctx = QContext(plan, q_cols)
    try:
        return all(cond(ctx) for cond in Q_CONDITIONS)
    except RejectError:
        return False


def enumerate_recording(mu_conj, ell):
    """All SSYT with entries in 1..ell of shape mu_conj, column-major."""
    heights = conjugate(mu_conj)
    results = []

    def columns_at(h, prev):
        # strictly increasing columns of height h, weakly dominating prev
        for combo in itertools.combinations(range(1, ell + 1), h):
            if prev is None or all(prev[i] <= combo[i] for i in range(h)):
                yield combo

    def extend(j, cols):
        if j == len(heights):
            results.append(tuple(cols))
            return
        prev = cols[-1] if cols else None
        for col in columns_at(heights[j], prev):
            cols.append(col)
            extend(j + 1, cols)
            cols.pop()

    extend(0, [])
    return results


def partitions_up_to(total, max_part):
    """All partitions with |mu| <= total and mu_1 <= max_part."""
    out = [()]

    def extend(prefix, remaining, cap):
        for part in range(min(cap, remaining), 0, -1):
            cur = prefix + (part,)
            out.append(cur)
            extend(cur, remaining - part, part)

    extend((), total, max_part)
    return out


def k_coefficients(plan, max_size):
    """The branching multiplicities K_mu for |mu| <= max_size, by direct
    enumeration of recording tableaux through the twelve conditions."""
    out = {}
    for mu in partitions_up_to(max_size, plan.ell):
        count = sum(1 for q_cols in enumerate_recording(conjugate(mu), plan.ell)
                    if in_k_set(plan, q_cols))
        if count:
            out[mu] = count
    return out


def k_set_via_inverse(plan, q_cols, alphabet):
    """Oracle membership test: pull the recording tableau back through the
    inverse correspondence (against the highest-weight insertion tableau)
    and validate the resulting tuple."""
    from .osptab import validate
    mu = tuple(len(c) for c in q_cols)  # shape of Q is mu'
    p_heights = conjugate(mu)           # column heights of P
    if p_heights and p_heights[0] > alphabet.size:
        raise RejectError("alphabet too small for the oracle")
    p_cols = tuple(tuple(alphabet.letter(i) for i in range(h))
                   for h in p_heights)
    try:
        matrix = inverse_rsk(p_cols, q_cols, ell=plan.ell)
        validate(matrix_to_tuple(matrix, plan).parts, plan)
        return True
    except (RejectError, ValueError):
        return False


# ---------------------------------------------------------------------------
# the branching bijection, verified

def verify_pieri(plan, alphabet, max_boxes=None):
    """Check the five properties of the correspondence from tableaux of the
    plan to pairs (P, Q): P semistandard, Q in the branching set, injectivity,
    weight preservation, and surjectivity by cardinality."""
    report = {"plan": {"lambda": list(plan.lam), "ell": plan.ell},
              "alphabet": str(alphabet), "failures": [], "n": 0, "by_mu": {}}
    seen = {}
    counts = {}
    elements = enumerate_tableaux(plan, alphabet, max_boxes)
    bound = max_boxes if max_boxes is not None else plan.ell * alphabet.size
    report["n"] = len(elements)
    for idx, t in enumerate(elements):
        matrix = tuple_to_matrix(t)
        p_cols, q_cols = rsk(matrix)
        where = {"index": idx}
        if not straight_is_semistandard(p_cols):
            report["failures"].append(("P not semistandard", where))
            continue
        if not in_k_set(plan, q_cols):
            report["failures"].append(("Q outside the branching set", where))
            continue
        key = (p_cols, q_cols)
        if key in seen:
            report["failures"].append(("collision", where))
            continue
        seen[key] = t
        content_t = sorted(a.rank for a in t.letters())
        content_p = sorted(a.rank for col in p_cols for a in col)
        if content_t != content_p:
            report["failures"].append(("weight not preserved", where))
            continue
        mu = conjugate(tuple(len(c) for c in p_cols))
        counts[mu] = counts.get(mu, 0) + 1
    k_all = k_coefficients(plan, bound)
    for mu in sorted(set(counts) | set(k_all)):
        ssyt = len(enumerate_ssyt(mu, alphabet))
        expect = ssyt * k_all.get(mu, 0)
        got = counts.get(mu, 0)
        report["by_mu"][",".join(map(str, mu))] = {"got": got, "expect": expect}
        if got != expect:
            report["failures"].append(
                ("cardinality mismatch at mu=%s" % (mu,), {}))
    report["ok"] = not report["failures"]
    return report


# ---------------------------------------------------------------------------
# expansion oracle: solve for the coefficients from the character

def _dominant_exponent(ex):
    return tuple(sorted((e for e in ex), reverse=True))


def k_from_character(plan, alphabet, max_boxes=None):
    """Recover the branching coefficients by peeling Schur functions off the
    character, degree by degree; classical alphabets only (triangularity of
    the Schur basis in even variables)."""
    if alphabet.kind != "classical":
        raise RejectError("the expansion oracle needs a classical alphabet")
    poly = s_character(plan, alphabet, max_boxes)
    bound = max_boxes if max_boxes is not None else plan.ell * alphabet.size
    by_degree = {}
    for (lv, ex), coeff in poly.terms.items():
        by_degree.setdefault(sum(ex), CharPoly()).add_term(lv, ex, coeff)
    out = {}
    schur_cache = {}
    for degree in sorted(by_degree):
        cur = by_degree[degree]
        while not cur.is_zero():
            (lv, ex), coeff = max(cur.terms.items(),
                                  key=lambda kv: _dominant_exponent(kv[0][1]))
            mu = tuple(e for e in _dominant_exponent(ex) if e)
            if coeff <= 0:
                raise RejectError("negative Schur coefficient at %s" % (mu,))
            if mu not in schur_cache:
                schur_cache[mu] = super_schur(mu, alphabet).shifted(plan.ell)
            cur = cur - schur_cache[mu].scaled(coeff)
            out[mu] = out.get(mu, 0) + coeff
    return out


def schur_expansion_matches(plan, alphabet, max_boxes=None, k_table=None):
    """Does z^ell * sum K_mu s_mu reproduce the character (truncated for
    bounded runs)?"""
    bound = max_boxes if max_boxes is not None else plan.ell * alphabet.size
    if k_table is None:
        k_table = k_coefficients(plan, bound)
    lhs = s_character(plan, alphabet, max_boxes)
    rhs = CharPoly()
    for mu, coeff in k_table.items():
        if alphabet.kind == "super":
            if len(mu) > alphabet.m and mu[alphabet.m] > alphabet.n:
                continue
            sm = super_schur(mu, alphabet, max_degree=max(bound, sum(mu)))
        else:
            if len(mu) > alphabet.size:
                continue
            sm = super_schur(mu, alphabet)
        rhs = rhs + sm.shifted(plan.ell).scaled(coeff)
    if max_boxes is not None:
        rhs = rhs.truncated(max_boxes)
        lhs = lhs.truncated(max_boxes)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Weyl dimension oracle for type D

def weyl_dim_D(level, lam, rank):
    """Dimension of the irreducible type D_rank module with highest weight
    Lambda(lambda, level), by the product formula over positive roots.

    In the coordinates g_j = (weight | delta_j) induced by the orthonormal
    delta basis and (Lambda_bm | delta_j) = -1/2, the positive roots pair to
    differences and negated sums of coordinates.
    """
    lam = tuple(x for x in lam if x)
    if not is_partition(lam):
        raise RejectError("lambda must be a partition")
    if len(lam) > rank:
        raise RejectError("lambda has more rows than the rank")
    lam1 = lam[0] if lam else 0
    lam2 = lam[1] if len(lam) > 1 else 0
    if level < 0 or level - lam1 - lam2 < 0:
        raise RejectError("weight is not dominant for type D")
    half = Fraction(level, 2)
    v = [Fraction(lam[j]) - half - j if j < len(lam) else -half - j
         for j in range(rank)]
    rho = [Fraction(-j) for j in range(rank)]
    num = den = Fraction(1)
    for j in range(rank):
        for k in range(j + 1, rank):
            num *= (v[j] - v[k]) * (v[j] + v[k])
            den *= (rho[j] - rho[k]) * (rho[j] + rho[k])
    dim = num / den
    if dim.denominator != 1 or dim <= 0:
        raise AssertionError("non-integral Weyl dimension")
    return int(dim)

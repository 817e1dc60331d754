"""Ortho-symplectic tableaux of type D.

The building blocks are two-column classes with an even-slide residue, a
barred variant, and spin columns:

* ``OspPair``: a semistandard filling of lambda(a, b, c) with b, c even whose
  signature is (a - r, b - r) for a residue r in {0, 1};
* ``BarPair``: a semistandard filling of lambda(0, b, c+1) with b, c even;
* ``SpinColumn``: a single column, sign + for even height and - for odd.

A full tableau is a tuple (T_L, ..., T_1, T_0) of such components whose
shapes are prescribed by a :class:`ShapePlan` and whose adjacent members are
pairwise admissible.
"""

from __future__ import annotations

from typing import NamedTuple

from .alphabet import EVEN
from .signature import Signature, gl_e_matrix, gl_f_matrix, sigma_pair
from .tableau import (column_is_valid, column_to_json, column_from_json,
                      conjugate, entry_from_bottom, is_partition, make_matrix,
                      row_pair_ok)

# named mutations for fault-injection testing (see cli verify --mutate)
MUTATIONS = set()


class RejectError(ValueError):
    """A candidate object fails a membership or admissibility condition."""


class OspPair(NamedTuple):
    left: tuple
    right: tuple
    a: int
    residue: int

    def boxes(self):
        return len(self.left) + len(self.right)

    def shape(self):
        c = len(self.left) - self.a
        return (self.a, len(self.right) - c, c)


class BarPair(NamedTuple):
    left: tuple
    right: tuple

    def boxes(self):
        return len(self.left) + len(self.right)

    def shape(self):
        c = len(self.left) - 1
        return (0, len(self.right) - len(self.left), c + 1)


class SpinColumn(NamedTuple):
    col: tuple

    @property
    def sign(self):
        return "+" if len(self.col) % 2 == 0 else "-"

    @property
    def residue(self):
        return len(self.col) % 2

    def boxes(self):
        return len(self.col)


def part_letters(part):
    if isinstance(part, SpinColumn):
        return part.col
    return part.right + part.left


# ---------------------------------------------------------------------------
# membership

def classify_pair(left, right, a):
    """Check membership of two columns in the class of a-pairs.

    Returns an :class:`OspPair` carrying the residue, or raises
    :class:`RejectError` with the violated condition.
    """
    left, right = tuple(left), tuple(right)
    if not (column_is_valid(left) and column_is_valid(right)):
        raise RejectError("columns are not semistandard")
    c = len(left) - a
    b = len(right) - c
    if c < 0 or b < 0:
        raise RejectError("columns too short for a=%d" % a)
    if b % 2 or c % 2:
        raise RejectError("b=%d, c=%d not both even" % (b, c))
    sig = sigma_pair(left, right)
    for r in (0, 1):
        if sig == (a - r, b - r):
            return OspPair(left, right, a, r)
    raise RejectError("signature %s is not (a-r, b-r) for r=0,1" % (sig,))


def try_classify_pair(left, right, a):
    try:
        return classify_pair(left, right, a)
    except RejectError:
        return None


def make_bar_pair(left, right):
    """Membership in the barred class: shape lambda(0, b, c+1), b, c even."""
    left, right = tuple(left), tuple(right)
    if not (column_is_valid(left) and column_is_valid(right)):
        raise RejectError("columns are not semistandard")
    if len(left) % 2 == 0:
        raise RejectError("left column height must be odd")
    b = len(right) - len(left)
    if b < 0 or b % 2:
        raise RejectError("right column must be taller by an even amount")
    if sigma_pair(left, right) != (0, b):
        raise RejectError("pair is not semistandard at shape lambda(0,%d,%d)"
                          % (b, len(left)))
    return BarPair(left, right)


def try_make_bar_pair(left, right):
    try:
        return make_bar_pair(left, right)
    except RejectError:
        return None


def valid_slide_offsets(left, right, a):
    """Offsets k for which the pair, with the right column slid k rows down
    from the lambda(a, b, c) arrangement, is row-semistandard.

    Membership in the a-pair class means this set is exactly {0} or {0, 1},
    and its maximum is the residue; used as an independent check of the
    signature characterization.
    """
    c = len(left) - a
    b = len(right) - c
    good = set()
    for k in range(0, min(a, b) + 1):
        ok = True
        for i in range(1, len(right) + 1):
            x = entry_from_bottom(left, i + a - k)
            y = entry_from_bottom(right, i)
            if x is not None and y is not None and not row_pair_ok(x, y):
                ok = False
                break
        if ok:
            good.add(k)
    return good


# ---------------------------------------------------------------------------
# the two splits

def _pair_matrix(left, right):
    # m^(1) is the right column, m^(2) the left column
    return make_matrix((right, left))


def lr_split(pair):
    """The split (LT, RT), computed as the (a - r)-th raising power at color 1
    of the two-column matrix."""
    if isinstance(pair, SpinColumn):
        return pair.col, pair.col
    m = _pair_matrix(pair.left, pair.right)
    for _ in range(pair.a - pair.residue):
        m = gl_e_matrix(m, 1)
        if m is None:
            raise AssertionError("raising power exhausted early")
    return m.cols[1], m.cols[0]


def star_split(pair):
    """The split (L*T, R*T), the lowering operator at color 1; residue 1 only."""
    if isinstance(pair, SpinColumn):
        if pair.residue != 1:
            raise RejectError("star split needs residue 1")
        return pair.col, pair.col
    if pair.residue != 1:
        raise RejectError("star split needs residue 1")
    m = gl_f_matrix(_pair_matrix(pair.left, pair.right), 1)
    if m is None:
        raise AssertionError("lowering undefined despite residue 1")
    return m.cols[1], m.cols[0]


def lr_split_sliding(pair):
    """Algorithm form of :func:`lr_split`: slide the right-column boxes down
    as far as rows stay semistandard, then move the uncovered left boxes
    across."""
    a, b, c = pair.shape()
    left_rows = {b + 1 + i: x for i, x in enumerate(pair.left)}
    bottom = a + b + c
    stop = bottom + 1
    right_rows = {}
    for i in range(len(pair.right) - 1, -1, -1):
        y = pair.right[i]
        r = i + 1
        while r + 1 < stop:
            x = left_rows.get(r + 1)
            if x is not None and not row_pair_ok(x, y):
                break
            r += 1
        right_rows[r] = y
        stop = r
    moved = 0
    for r, x in sorted(left_rows.items()):
        if r not in right_rows:
            right_rows[r] = x
            moved += 1
            del left_rows[r]
    if moved != pair.a - pair.residue:
        raise AssertionError("slid %d boxes, expected a - r = %d"
                             % (moved, pair.a - pair.residue))
    lcol = tuple(x for _, x in sorted(left_rows.items()))
    rcol = tuple(y for _, y in sorted(right_rows.items()))
    return lcol, rcol


def star_split_sliding(pair):
    """Algorithm form of :func:`star_split`: slide the left-column boxes up,
    then move the lowest uncovered right box across."""
    if pair.residue != 1:
        raise RejectError("star split needs residue 1")
    a, b, c = pair.shape()
    right_rows = {i + 1: y for i, y in enumerate(pair.right)}
    left_rows = {}
    stop = 0
    for i, x in enumerate(pair.left):
        r = b + 1 + i
        while r - 1 > stop:
            y = right_rows.get(r - 1)
            if y is not None and not row_pair_ok(x, y):
                break
            r -= 1
        left_rows[r] = x
        stop = r
    free = [r for r in sorted(right_rows, reverse=True) if r not in left_rows]
    if not free:
        raise AssertionError("no movable right box despite residue 1")
    r = free[0]
    left_rows[r] = right_rows.pop(r)
    lcol = tuple(x for _, x in sorted(left_rows.items()))
    rcol = tuple(y for _, y in sorted(right_rows.items()))
    return lcol, rcol


# ---------------------------------------------------------------------------
# admissibility

def _adm_profile(s):
    """(a', r, S^L, LS, S^Lstar, is_spin_minus) of the right-hand member."""
    if isinstance(s, SpinColumn):
        return (s.residue, s.residue, s.col, s.col, s.col, s.sign == "-")
    ls, _ = lr_split(s)
    lstar = star_split(s)[0] if s.residue == 1 else None
    return (s.a, s.residue, s.left, ls, lstar, False)


def _entries_leq(x_col, y_col, shift=0):
    """x_col(i + shift) <= y_col(i) for all i, equality only at even entries."""
    for i in range(1, len(x_col) - shift + 1):
        x = entry_from_bottom(x_col, i + shift)
        y = entry_from_bottom(y_col, i)
        if y is None or not row_pair_ok(x, y):
            return False
    return True


def _admissible_nonbar(t, s):
    """T < S for T an a-pair and S an a'-pair or a spin column."""
    a_p, r_s, s_l, ls, s_lstar, spin_minus = _adm_profile(s)
    if t.a < a_p:
        raise RejectError("left member must have a >= a'")
    r_t = t.residue
    eps = 1 if spin_minus else 0

    # (i) height bound
    ok = len(t.right) <= len(s_l) - a_p + 2 * r_s * r_t
    if "flip-adm-i" in MUTATIONS:
        ok = len(t.right) >= len(s_l) - a_p + 2 * r_s * r_t
    if not ok:
        return False
    # (ii)
    x_col = star_split(t)[1] if r_s == r_t == 1 else t.right
    if not _entries_leq(x_col, ls):
        return False
    # (iii)
    rt = lr_split(t)[1]
    if r_s == r_t == 1:
        return _entries_leq(rt, s_lstar, shift=t.a - a_p + eps)
    return _entries_leq(rt, s_l, shift=t.a - a_p)


def _admissible_bar(t_right, s_left):
    """(T^R, S^L) is a member of the barred class."""
    return try_make_bar_pair(t_right, s_left) is not None


def is_admissible(t, s):
    """The admissibility relation T < S between adjacent components."""
    if isinstance(t, OspPair):
        if isinstance(s, (OspPair, SpinColumn)):
            return _admissible_nonbar(t, s)
        if isinstance(s, BarPair):
            return _admissible_nonbar(t, SpinColumn(s.left))
    elif isinstance(t, BarPair):
        if isinstance(s, BarPair):
            return _admissible_bar(t.right, s.left)
        if isinstance(s, SpinColumn) and s.sign == "-":
            return _admissible_bar(t.right, s.col)
    raise RejectError("no admissibility relation between %s and %s"
                      % (type(t).__name__, type(s).__name__))


def _sigma_in_shape(u, v, aa, bb):
    """sigma(u, v) == (aa - p, bb - p) for some 0 <= p <= min(aa, bb)."""
    sig = sigma_pair(u, v)
    p = aa - sig.p
    return 0 <= p <= min(aa, bb) and sig == Signature(aa - p, bb - p)


def is_admissible_sigma(t, s):
    """Same relation, evaluated through signatures instead of entrywise
    comparisons; the two evaluations must agree."""
    if isinstance(t, OspPair) and isinstance(s, BarPair):
        return is_admissible_sigma(t, SpinColumn(s.left))
    if isinstance(t, BarPair):
        if isinstance(s, BarPair):
            right = s.left
        elif isinstance(s, SpinColumn) and s.sign == "-":
            right = s.col
        else:
            raise RejectError("no admissibility relation")
        if len(t.right) % 2 == 0 or len(right) < len(t.right):
            return False
        return sigma_pair(t.right, right) == (0, len(right) - len(t.right))
    if not isinstance(t, OspPair):
        raise RejectError("no admissibility relation")

    a_p, r_s, s_l, ls, s_lstar, spin_minus = _adm_profile(s)
    if t.a < a_p:
        raise RejectError("left member must have a >= a'")
    r_t = t.residue
    if len(t.right) > len(s_l) - a_p + 2 * r_s * r_t:
        return False
    x_col = star_split(t)[1] if r_s == r_t == 1 else t.right
    if len(ls) < len(x_col):
        return False
    if sigma_pair(x_col, ls) != (0, len(ls) - len(x_col)):
        return False
    rt = lr_split(t)[1]
    eps = 1 if (spin_minus and r_s == r_t == 1) else 0
    y_col = s_lstar if r_s == r_t == 1 else s_l
    aa = t.a - a_p + eps
    bb = aa + len(y_col) - len(rt)
    return bb >= 0 and _sigma_in_shape(rt, y_col, aa, bb)


# ---------------------------------------------------------------------------
# shape plans

class ShapePlan(NamedTuple):
    lam: tuple       # the partition lambda
    ell: int
    sign: str        # '+' if ell - 2*lambda_1 >= 0 else '-'
    q: int
    r: int           # 0 or 1; the number of spin components
    M: int           # number of a-pair components
    L: int           # M + q
    heights: tuple   # a_1 .. a_M

    def boxes_lower_bound(self):
        return sum(self.heights) + (2 * self.q + self.r if self.sign == "-" else 0)


def shape_plan(lam, ell, alphabet=None):
    """Derive the component plan of (lambda, ell); rejects pairs outside the
    admissible set and, when an alphabet is given, outside its lattice."""
    lam = tuple(int(x) for x in lam if x)
    if not is_partition(lam):
        raise RejectError("lambda must be a partition")
    if ell < 1:
        raise RejectError("ell must be positive")
    lam1 = lam[0] if lam else 0
    lam2 = lam[1] if len(lam) > 1 else 0
    if ell - lam1 - lam2 < 0:
        raise RejectError("ell - lambda_1 - lambda_2 must be non-negative")
    if alphabet is not None:
        if alphabet.kind == "classical":
            if len(lam) > alphabet.size:
                raise RejectError("lambda has more than m+n rows")
        else:
            if len(lam) > alphabet.m and lam[alphabet.m] > alphabet.n:
                raise RejectError("lambda_{m+1} exceeds n")
    d = ell - 2 * lam1
    if d >= 0:
        sign, q, r, big = "+", d // 2, d % 2, lam
    else:
        sign, q, r, big = "-", (-d) // 2, (-d) % 2, (ell - lam1,) + lam[1:]
    m_count = big[0] if big else 0
    nu = conjugate(big)
    heights = tuple(nu[m_count - k] for k in range(1, m_count + 1))
    plan = ShapePlan(lam, ell, sign, q, r, m_count, m_count + q, heights)
    assert 2 * plan.L + plan.r == ell
    return plan


class OspTableauD(NamedTuple):
    """A tuple (T_L, ..., T_1, T_0); the spin component, present only when
    the plan has r = 1, is last."""

    parts: tuple
    plan: ShapePlan

    def boxes(self):
        return sum(p.boxes() for p in self.parts)

    def letters(self):
        out = []
        for p in self.parts:
            out.extend(part_letters(p))
        return out


def expected_kinds(plan):
    """Kind and parameter of each slot, in (T_L, ..., T_0) order."""
    kinds = []
    for t in range(plan.M, 0, -1):
        kinds.append(("pair", plan.heights[t - 1]))
    for _ in range(plan.q):
        kinds.append(("pair", 0) if plan.sign == "+" else ("bar", None))
    if plan.r:
        kinds.append(("spin", plan.sign))
    return kinds


def validate(parts, plan, alphabet=None):
    """Check componentwise membership and all adjacent admissibilities."""
    parts = tuple(parts)
    kinds = expected_kinds(plan)
    if len(parts) != len(kinds):
        raise RejectError("expected %d components, got %d"
                          % (len(kinds), len(parts)))
    for idx, (part, (kind, param)) in enumerate(zip(parts, kinds)):
        k = len(parts) - 1 - idx if plan.r else len(parts) - idx  # math index
        if kind == "pair":
            if not isinstance(part, OspPair) or part.a != param:
                raise RejectError("component T_%d must be an a=%s pair" % (k, param))
            classify_pair(part.left, part.right, part.a)
        elif kind == "bar":
            if not isinstance(part, BarPair):
                raise RejectError("component T_%d must be barred" % k)
            make_bar_pair(part.left, part.right)
        else:
            if not isinstance(part, SpinColumn) or part.sign != param:
                raise RejectError("component T_0 must be a %s spin column" % param)
            if not column_is_valid(part.col):
                raise RejectError("component T_0 is not a column")
        if alphabet is not None:
            for a in part_letters(part):
                if not alphabet.contains(a):
                    raise RejectError("letter %r outside %s in T_%d" % (a, alphabet, k))
    for idx in range(len(parts) - 1):
        if not is_admissible(parts[idx], parts[idx + 1]):
            k = len(parts) - 1 - idx if plan.r else len(parts) - idx
            raise RejectError("T_%d < T_%d fails" % (k, k - 1))
    return OspTableauD(parts, plan)


# ---------------------------------------------------------------------------
# enumeration

def all_columns(alphabet, height):
    """All single columns of the given height, lexicographic order."""
    out = []

    def extend(col, min_rank):
        if len(col) == height:
            out.append(tuple(col))
            return
        for rank in range(min_rank, alphabet.size):
            a = alphabet.letter(rank)
            col.append(a)
            extend(col, rank + (1 if a.parity == EVEN else 0))
            col.pop()

    extend([], 0)
    return out


def _columns_by_height(alphabet, max_height):
    return {h: all_columns(alphabet, h) for h in range(max_height + 1)}


def spin_columns(alphabet, sign, budget):
    cols = []
    start = 0 if sign == "+" else 1
    for h in range(start, budget + 1, 2):
        cols.extend(SpinColumn(c) for c in all_columns(alphabet, h))
    return cols


def osp_pairs(alphabet, a, budget, bar=False):
    """All members of the a-pair class (or the barred class) within budget."""
    out = []
    max_h = budget if alphabet.kind == "super" else alphabet.size
    cols = _columns_by_height(alphabet, min(max_h, budget))
    if bar:
        shapes = ((0, b, c + 1) for c in range(0, budget, 2)
                  for b in range(0, budget + 1, 2))
    else:
        shapes = ((a, b, c) for c in range(0, budget + 1, 2)
                  for b in range(0, budget + 1, 2))
    for aa, b, c in shapes:
        hl, hr = aa + c, b + c
        if hl + hr > budget or hl > max_h or hr > max_h:
            continue
        for left in cols.get(hl, ()):
            for right in cols.get(hr, ()):
                part = (try_make_bar_pair(left, right) if bar
                        else try_classify_pair(left, right, aa))
                if part is not None:
                    out.append(part)
    return out


def _part_sort_key(part):
    return (part.boxes(),
            tuple(a.rank for a in part_letters(part)),
            isinstance(part, BarPair))


def enumerate_tableaux(plan, alphabet, max_boxes=None):
    """Every tableau of the plan with at most max_boxes boxes, exactly once,
    in a deterministic order.

    Classical alphabets are intrinsically finite and may omit the bound;
    super alphabets require one.
    """
    if max_boxes is None:
        if alphabet.kind == "super":
            raise RejectError("super alphabets require max_boxes")
        max_boxes = plan.ell * alphabet.size
    kinds = expected_kinds(plan)
    floor = plan.boxes_lower_bound()
    if floor > max_boxes:
        return []

    candidates = []
    for kind, param in kinds:
        budget = max_boxes - (floor - _slot_floor(kind, param))
        if kind == "pair":
            cands = osp_pairs(alphabet, param, budget)
        elif kind == "bar":
            cands = osp_pairs(alphabet, 0, budget, bar=True)
        else:
            cands = spin_columns(alphabet, param, budget)
        candidates.append(sorted(cands, key=_part_sort_key))

    results = []

    def extend(idx, chosen, used):
        # build right to left: idx counts from the last slot backwards
        if idx < 0:
            results.append(OspTableauD(tuple(reversed(chosen)), plan))
            return
        for part in candidates[idx]:
            if used + part.boxes() > max_boxes:
                continue
            if chosen and not is_admissible(part, chosen[-1]):
                continue
            chosen.append(part)
            extend(idx - 1, chosen, used + part.boxes())
            chosen.pop()

    extend(len(kinds) - 1, [], 0)
    results.sort(key=lambda t: (t.boxes(),
                                tuple(_part_sort_key(p) for p in t.parts)))
    return results


def _slot_floor(kind, param):
    if kind == "pair":
        return param
    if kind == "bar":
        return 2
    return 0 if param == "+" else 1


# ---------------------------------------------------------------------------
# matrix form and highest-weight candidates

def tuple_to_matrix(t):
    """The biword matrix of a tableau tuple: m^(1) is T_0 (when present),
    then each pair contributes its right and left columns."""
    cols = []
    for part in reversed(t.parts):
        if isinstance(part, SpinColumn):
            cols.append(part.col)
        else:
            cols.append(part.right)
            cols.append(part.left)
    return make_matrix(cols)


def parts_from_columns(cols, plan):
    """Rebuild components from matrix columns; raises RejectError when a
    column pair leaves its class."""
    kinds = expected_kinds(plan)
    parts = []
    pos = 0
    for kind, param in reversed(kinds):
        if kind == "spin":
            parts.append(SpinColumn(cols[pos]))
            pos += 1
        else:
            right, left = cols[pos], cols[pos + 1]
            pos += 2
            if kind == "bar":
                parts.append(make_bar_pair(left, right))
            else:
                parts.append(classify_pair(left, right, param))
    if pos != len(cols):
        raise RejectError("column count does not match the plan")
    return tuple(reversed(parts))


def matrix_to_tuple(matrix, plan):
    return OspTableauD(parts_from_columns(matrix.cols, plan), plan)


def highest_weight_tuple(plan, alphabet, family):
    """The highest-weight candidate: H for the classical family, the genuine
    one for the super family."""
    lam = plan.lam
    lam_conj = conjugate(lam)

    def column_of_shape(j):
        # j-th column (1-based) of the weight-lattice highest tableau
        height = lam_conj[j - 1]
        ranks = list(range(min(height, alphabet.m)))
        if family == "super":
            ranks += [alphabet.m + j - 1] * (height - alphabet.m)
        else:
            ranks += list(range(alphabet.m, height))
        return tuple(alphabet.letter(r) for r in ranks)

    parts = []
    for t in range(plan.M, 0, -1):
        if family == "super":
            left = column_of_shape(plan.M - t + 1)
        else:
            left = tuple(alphabet.letter(r) for r in range(plan.heights[t - 1]))
        parts.append(classify_pair(left, (), plan.heights[t - 1]))
    top = (alphabet.letter(0),)
    for _ in range(plan.q):
        if plan.sign == "+":
            parts.append(classify_pair((), (), 0))
        else:
            parts.append(make_bar_pair(top, top))
    if plan.r:
        parts.append(SpinColumn(() if plan.sign == "+" else top))
    return validate(parts, plan, alphabet)


# ---------------------------------------------------------------------------
# JSON

def part_to_json(part):
    if isinstance(part, SpinColumn):
        return {"kind": "spin", "sign": part.sign,
                "col": column_to_json(part.col)["col"]}
    name = "bar" if isinstance(part, BarPair) else "pair"
    obj = {"kind": name,
           "L": column_to_json(part.left)["col"],
           "R": column_to_json(part.right)["col"]}
    if name == "pair":
        obj["a"] = part.a
    return obj


def part_from_json(alphabet, obj):
    if obj["kind"] == "spin":
        return SpinColumn(column_from_json(alphabet, {"col": obj["col"]}))
    left = column_from_json(alphabet, {"col": obj["L"]})
    right = column_from_json(alphabet, {"col": obj["R"]})
    if obj["kind"] == "bar":
        return make_bar_pair(left, right)
    return classify_pair(left, right, obj["a"])


def plan_to_json(plan):
    return {"lambda": list(plan.lam), "ell": plan.ell, "sign": plan.sign,
            "q": plan.q, "r": plan.r, "M": plan.M, "L": plan.L,
            "heights": list(plan.heights)}


def plan_from_json(obj):
    return shape_plan(tuple(obj["lambda"]), obj["ell"])


def tuple_to_json(t):
    return {"plan": plan_to_json(t.plan),
            "parts": [part_to_json(p) for p in t.parts]}


def tuple_from_json(alphabet, obj):
    plan = plan_from_json(obj["plan"])
    parts = tuple(part_from_json(alphabet, p) for p in obj["parts"])
    return validate(parts, plan, alphabet)

"""Kashiwara operators and crystal-graph exploration.

Elements are flattened to tensors of atoms and the operators act through the
sign-sequence rule of :mod:`ospd.signature`:

* the classical family identifies a tuple (T_L, ..., T_0) with
  T_0 (x) ... (x) T_L, reads each component by its column word, and applies
  the lower tensor rule for every color;
* the super family identifies the tuple with T_L (x) ... (x) T_0, reads each
  component by its reverse word, and applies the upper rule on barred
  colors, the branching rule on the isotropic color 0, and the lower rule on
  half-integer colors.

For the distinguished spin color the atoms are whole columns, on which
raising removes the top domino (bm, bm-1) and lowering adds it; for every
other color the atoms are letters moving along the crystal chain of the
alphabet.  Everything is computed at the level where sign choices in the
isotropic rule are invisible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .alphabet import Weight, simple_root_delta, simple_root_indices
from .osptab import (BarPair, OspTableauD, SpinColumn, classify_pair,
                     enumerate_tableaux, make_bar_pair, tuple_to_json,
                     parts_from_columns, tuple_to_matrix)
from .signature import survivors
from .tableau import BiwordMatrix, column_is_valid, letters_weight, make_matrix


class CrystalError(Exception):
    """An operator left the set it is proven to preserve."""


# ---------------------------------------------------------------------------
# letter atoms

def letter_e(alphabet, color, a):
    """One step left along the crystal chain of the alphabet; None otherwise."""
    if color.is_spin:
        raise ValueError("the spin color does not act on single letters")
    return alphabet.letter(color.chain - 1) if a.rank == color.chain else None


def letter_f(alphabet, color, a):
    if color.is_spin:
        raise ValueError("the spin color does not act on single letters")
    return alphabet.letter(color.chain) if a.rank == color.chain - 1 else None


def _letter_sign(color, a):
    if a.rank == color.chain:
        return "-"
    if a.rank == color.chain - 1:
        return "+"
    return "."


# ---------------------------------------------------------------------------
# column atoms for the spin color

def spin_e_col(alphabet, col):
    """Remove the domino (bm, bm-1) from the top, when it is there."""
    if len(col) >= 2 and col[0].rank == 0 and col[1].rank == 1:
        return col[2:]
    return None


def spin_f_col(alphabet, col):
    """Add the domino (bm, bm-1) on top, when the column stays semistandard."""
    if not col or col[0].rank >= 2:
        return (alphabet.letter(0), alphabet.letter(1)) + tuple(col)
    return None


def _spin_sign(col):
    if len(col) >= 2 and col[0].rank == 0 and col[1].rank == 1:
        return "-"
    if not col or col[0].rank >= 2:
        return "+"
    return "."


def e_spin_bar(alphabet, spin):
    new = spin_e_col(alphabet, spin.col)
    return None if new is None else SpinColumn(new)


def f_spin_bar(alphabet, spin):
    new = spin_f_col(alphabet, spin.col)
    return None if new is None else SpinColumn(new)


# ---------------------------------------------------------------------------
# the tensor engine

def _pick(signs, op):
    """Index acted on by raising ('e') or lowering ('f'), or None."""
    minus, plus = survivors(signs)
    if op == "e":
        return minus[-1] if minus else None
    return plus[0] if plus else None


def _apply_letters(alphabet, family, color, seq, op):
    """Act on a list of letters in tensor order; returns (index, letter)."""
    if family == "super" and color.odd:
        # isotropic rule: descend into the rightmost factor whose weight
        # pairs positively with the coroot, the first factor otherwise
        ranks = (alphabet.m - 1, alphabet.m)
        target = None
        for idx in range(len(seq) - 1, -1, -1):
            if seq[idx].rank in ranks:
                target = idx
                break
        if target is None:
            return None
        a = seq[target]
        if op == "e":
            new = alphabet.letter(alphabet.m - 1) if a.rank == alphabet.m else None
        else:
            new = alphabet.letter(alphabet.m) if a.rank == alphabet.m - 1 else None
        return None if new is None else (target, new)

    upper = family == "super" and color.chain < alphabet.m
    order = range(len(seq) - 1, -1, -1) if upper else range(len(seq))
    signs = [_letter_sign(color, seq[i]) for i in order]
    hit = _pick(signs, op)
    if hit is None:
        return None
    idx = list(order)[hit]
    new = letter_e(alphabet, color, seq[idx]) if op == "e" else \
        letter_f(alphabet, color, seq[idx])
    if new is None:
        raise AssertionError("sign rule chose an inert letter")
    return idx, new


def e_word(alphabet, family, color, word, reading="given"):
    return _word_op(alphabet, family, color, word, "e", reading)


def f_word(alphabet, family, color, word, reading="given"):
    return _word_op(alphabet, family, color, word, "f", reading)


def _word_op(alphabet, family, color, word, op, reading):
    """Operator on a plain word of letters, viewed as the tensor of its
    letters in the given order ('given') or the reversed order ('reverse')."""
    if color.is_spin:
        raise ValueError("the spin color does not act letterwise")
    seq = list(word)
    if reading == "reverse":
        seq.reverse()
    hit = _apply_letters(alphabet, family, color, seq, op)
    if hit is None:
        return None
    idx, new = hit
    seq[idx] = new
    if reading == "reverse":
        seq.reverse()
    return tuple(seq)


# ---------------------------------------------------------------------------
# operators on matrix-column lists

def _cols_op(alphabet, family, color, cols, op):
    """Act on a list of columns given in matrix order m^(1), ..., m^(ell)."""
    if color.is_spin:
        # classical: lower rule on the matrix order; super: upper rule on the
        # reversed order, which is the same computation
        signs = [_spin_sign(c) for c in cols]
        idx = _pick(signs, op)
        if idx is None:
            return None
        new = (spin_e_col if op == "e" else spin_f_col)(alphabet, cols[idx])
        if new is None:
            raise AssertionError("sign rule chose an inert column")
        out = list(cols)
        out[idx] = new
        return tuple(out)

    positions = []
    if family == "classical":
        for j, col in enumerate(cols):
            positions.extend((j, i) for i in range(len(col)))
    else:
        for j in range(len(cols) - 1, -1, -1):
            positions.extend((j, i) for i in range(len(cols[j]) - 1, -1, -1))
    seq = [cols[j][i] for j, i in positions]
    hit = _apply_letters(alphabet, family, color, seq, op)
    if hit is None:
        return None
    (j, i), new = positions[hit[0]], hit[1]
    out = [list(c) for c in cols]
    out[j][i] = new
    if not column_is_valid(tuple(out[j])):
        raise AssertionError("letter move broke a column")
    return tuple(tuple(c) for c in out)


def e_matrix(alphabet, family, color, matrix):
    cols = _cols_op(alphabet, family, color, matrix.cols, "e")
    return None if cols is None else make_matrix(cols)


def f_matrix(alphabet, family, color, matrix):
    cols = _cols_op(alphabet, family, color, matrix.cols, "f")
    return None if cols is None else make_matrix(cols)


# ---------------------------------------------------------------------------
# operators on components and full tableaux

def _part_cols(part):
    if isinstance(part, SpinColumn):
        return (part.col,)
    return (part.right, part.left)


def _rebuild_part(part, cols):
    if isinstance(part, SpinColumn):
        return SpinColumn(cols[0])
    right, left = cols
    if isinstance(part, BarPair):
        return make_bar_pair(left, right)
    return classify_pair(left, right, part.a)


def _part_op(alphabet, family, color, part, op):
    cols = _cols_op(alphabet, family, color, _part_cols(part), op)
    if cols is None:
        return None
    try:
        return _rebuild_part(part, cols)
    except Exception as exc:
        raise CrystalError("component left its class: %s" % exc) from exc


def e_pair_bar(alphabet, family, color, part):
    """Operator on a single two-column or spin component."""
    return _part_op(alphabet, family, color, part, "e")


def f_pair_bar(alphabet, family, color, part):
    return _part_op(alphabet, family, color, part, "f")


def e_osp(alphabet, family, color, tt):
    return _osp_op(alphabet, family, color, tt, "e")


def f_osp(alphabet, family, color, tt):
    return _osp_op(alphabet, family, color, tt, "f")


def _osp_op(alphabet, family, color, tt, op):
    cols = _cols_op(alphabet, family, color, tuple_to_matrix(tt).cols, op)
    if cols is None:
        return None
    try:
        return OspTableauD(parts_from_columns(cols, tt.plan), tt.plan)
    except Exception as exc:
        raise CrystalError("tableau left its set: %s" % exc) from exc


def is_highest_weight(alphabet, family, tt):
    return all(e_osp(alphabet, family, color, tt) is None
               for color in simple_root_indices(alphabet))


def eps_phi(alphabet, family, color, tt, cap=10000):
    """String statistics by repeated application."""
    eps = 0
    cur = tt
    while True:
        cur = e_osp(alphabet, family, color, cur)
        if cur is None:
            break
        eps += 1
        if eps > cap:
            raise CrystalError("runaway raising string")
    phi = 0
    cur = tt
    while True:
        cur = f_osp(alphabet, family, color, cur)
        if cur is None:
            break
        phi += 1
        if phi > cap:
            raise CrystalError("runaway lowering string")
    return eps, phi


# ---------------------------------------------------------------------------
# weights

def part_weight(alphabet, part):
    lv = 1 if isinstance(part, SpinColumn) else 2
    letters = part.col if isinstance(part, SpinColumn) else part.right + part.left
    w = letters_weight(alphabet, letters)
    return Weight(lv, w.counts)


def tuple_weight(alphabet, tt):
    total = Weight(0, (0,) * alphabet.size)
    for part in tt.parts:
        total = total + part_weight(alphabet, part)
    return total


def plan_weight(alphabet, plan):
    """The target weight Lambda(lambda, ell) in the alphabet's coordinates."""
    from .tableau import conjugate
    lam = plan.lam
    counts = [0] * alphabet.size
    for j in range(min(len(lam), alphabet.m)):
        counts[j] = lam[j]
    tail = lam[alphabet.m:]
    if alphabet.kind == "classical":
        for j, part in enumerate(tail):
            counts[alphabet.m + j] = part
    else:
        for j, part in enumerate(conjugate(tail)):
            counts[alphabet.m + j] = part
    return Weight(plan.ell, tuple(counts))


def highest_ssyt_cols(alphabet, family, shape):
    """The highest weight tableau of a straight shape, column-major: barred
    letters fill the first rows; below row m the super family places the
    j-th odd letter down column j, the classical family continues along the
    letter chain."""
    from .tableau import conjugate
    cols = []
    for j, h in enumerate(conjugate(shape), start=1):
        ranks = list(range(min(h, alphabet.m)))
        if family == "super":
            ranks += [alphabet.m + j - 1] * (h - alphabet.m)
        else:
            ranks += list(range(alphabet.m, h))
        cols.append(tuple(alphabet.letter(r) for r in ranks))
    return tuple(cols)


def is_genuine_highest(alphabet, family, tt):
    """Is the insertion tableau of the tuple the highest weight tableau of
    its shape?  Raising-frozen elements need not be genuine in the super
    family; the genuine one is unique."""
    from .tableau import rsk, straight_shape
    p_cols, _ = rsk(tuple_to_matrix(tt))
    shape = straight_shape(p_cols)
    return p_cols == highest_ssyt_cols(alphabet, family, shape)


# ---------------------------------------------------------------------------
# the Fock-space column bijection

def psi_plus(matrix):
    """One-column matrices are exactly the spin columns."""
    if not isinstance(matrix, BiwordMatrix) or matrix.ell != 1:
        raise ValueError("psi_plus expects a one-column matrix")
    return SpinColumn(matrix.cols[0])


def psi_plus_inverse(spin):
    return make_matrix((spin.col,))


# ---------------------------------------------------------------------------
# graph exploration

@dataclass
class CrystalGraph:
    alphabet: object
    family: str
    plan: object
    max_boxes: object
    vertices: list
    weights: list
    edges: list = field(default_factory=list)       # (src, color name, dst)
    truncated: list = field(default_factory=list)   # (src, color name)
    sources: list = field(default_factory=list)
    components: int = 0

    def index(self):
        return {_key(t): i for i, t in enumerate(self.vertices)}

    def vertex_stats(self, i):
        """String statistics {color name: (eps, phi)} of one vertex,
        computed operationally."""
        return {c.name: eps_phi(self.alphabet, self.family, c, self.vertices[i])
                for c in simple_root_indices(self.alphabet)}


def _key(tt):
    return json.dumps(tuple_to_json(tt), sort_keys=True)


def explore(plan, alphabet, family, max_boxes=None):
    """Build the colored graph on the enumerated set, checking closure.

    Every raising image must stay inside the set; lowering images may leave
    it only through the box bound of a super run, and such edges are recorded
    as truncated rather than followed.
    """
    vertices = enumerate_tableaux(plan, alphabet, max_boxes)
    index = {_key(t): i for i, t in enumerate(vertices)}
    graph = CrystalGraph(alphabet, family, plan, max_boxes, vertices,
                         [tuple_weight(alphabet, t) for t in vertices])
    colors = simple_root_indices(alphabet)
    parent = list(range(len(vertices)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for src, tt in enumerate(vertices):
        is_source = True
        for color in colors:
            up = e_osp(alphabet, family, color, tt)
            if up is not None:
                is_source = False
                if _key(up) not in index:
                    raise CrystalError("raising left the enumerated set at "
                                       "vertex %d color %s" % (src, color.name))
            down = f_osp(alphabet, family, color, tt)
            if down is None:
                continue
            key = _key(down)
            if key not in index:
                if max_boxes is not None and down.boxes() > max_boxes:
                    graph.truncated.append((src, color.name))
                    continue
                raise CrystalError("lowering left the enumerated set at "
                                   "vertex %d color %s" % (src, color.name))
            dst = index[key]
            graph.edges.append((src, color.name, dst))
            union(src, dst)
        if is_source:
            graph.sources.append(src)
    graph.components = len({find(x) for x in range(len(vertices))}) \
        if vertices else 0
    return graph


def check_axioms(graph):
    """Edge-local crystal axioms; returns the list of violations."""
    alphabet, family = graph.alphabet, graph.family
    colors = {c.name: c for c in simple_root_indices(alphabet)}
    bad = []
    for src, cname, dst in graph.edges:
        color = colors[cname]
        back = e_osp(alphabet, family, color, graph.vertices[dst])
        if back is None or _key(back) != _key(graph.vertices[src]):
            bad.append(("inverse", src, cname, dst))
        root = simple_root_delta(alphabet, color)
        want = graph.weights[src].sub(Weight(0, root.counts))
        if graph.weights[dst] != want:
            bad.append(("weight", src, cname, dst))
    return bad


def f_reachable(graph, start):
    """Vertices reachable from ``start`` along lowering edges; by the inverse
    axiom these are exactly the vertices that raise back to ``start``."""
    adj = {}
    for src, _, dst in graph.edges:
        adj.setdefault(src, []).append(dst)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for nxt in adj.get(cur, ()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


# ---------------------------------------------------------------------------
# export

def graph_to_json(graph):
    return {
        "family": graph.family,
        "plan": tuple_to_json(graph.vertices[0])["plan"] if graph.vertices
                else None,
        "vertices": [tuple_to_json(t) for t in graph.vertices],
        "edges": [{"src": s, "color": c, "dst": d} for s, c, d in graph.edges],
        "sources": list(graph.sources),
        "truncated": [{"src": s, "color": c} for s, c in graph.truncated],
        "components": graph.components,
    }


def graph_to_dot(graph):
    """DOT export; highest-weight vertices are double-circled, edges carry
    their color as label."""
    lines = ["digraph crystal {"]
    sources = set(graph.sources)
    for i in range(len(graph.vertices)):
        shape = "doublecircle" if i in sources else "circle"
        lines.append('  v%d [shape=%s label="%d"];' % (i, shape, i))
    for src, color, dst in graph.edges:
        lines.append('  v%d -> v%d [label="%s"];' % (src, dst, color))
    for src, color in graph.truncated:
        lines.append('  t_%s_%d [shape=point label=""];' % (color, src))
        lines.append('  v%d -> t_%s_%d [label="%s" style=dashed];'
                     % (src, color, src, color))
    lines.append("}")
    return "\n".join(lines) + "\n"

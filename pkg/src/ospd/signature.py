"""The plus/minus signature calculus and gl_ell raising/lowering operators.

A sign sequence is reduced by repeatedly cancelling adjacent (+, -) pairs,
ignoring dots in between; the reduction is order independent and is computed
here by a single left-to-right stack pass.  On the reduced sequence the
raising operator acts at the rightmost surviving '-', the lowering operator
at the leftmost surviving '+'.
"""

from __future__ import annotations

from typing import NamedTuple

from .alphabet import EVEN
from .tableau import BiwordMatrix, make_matrix, sorted_column

PLUS = "+"
MINUS = "-"
DOT = "."


class Signature(NamedTuple):
    p: int  # number of surviving minuses
    q: int  # number of surviving pluses


def survivors(symbols):
    """Indices of surviving minuses and pluses after full reduction."""
    minus, stack = [], []
    for idx, s in enumerate(symbols):
        if s == PLUS:
            stack.append(idx)
        elif s == MINUS:
            if stack:
                stack.pop()
            else:
                minus.append(idx)
        elif s != DOT:
            raise ValueError("bad symbol %r" % (s,))
    return minus, stack


def reduce(symbols):
    """Reduced sequence, cancelled pairs replaced by dots."""
    minus, plus = survivors(symbols)
    keep = set(minus) | set(plus)
    return tuple(s if i in keep else DOT for i, s in enumerate(symbols))


def signature_of(symbols):
    minus, plus = survivors(symbols)
    return Signature(len(minus), len(plus))


# ---------------------------------------------------------------------------
# signature of a pair of columns

def merged_pair_word(u, v):
    """Entries of U and V in weakly decreasing order with sources.

    For a letter occurring in both columns, the copies from U sit to the
    right of those from V if the letter is even, to the left if odd.
    Returns a list of (letter, source) with source '-' for U and '+' for V.
    """

    def key(item):
        letter, src = item
        # descending rank; even ties put V (+) first, odd ties put U (-) first
        if letter.parity == EVEN:
            tie = 0 if src == PLUS else 1
        else:
            tie = 0 if src == MINUS else 1
        return (-letter.rank, tie)

    items = [(a, MINUS) for a in u] + [(a, PLUS) for a in v]
    items.sort(key=key)
    return items


def sigma_pair(u, v):
    """The signature sigma(U, V) of two single columns."""
    return signature_of([src for _, src in merged_pair_word(u, v)])


# ---------------------------------------------------------------------------
# gl_ell words over {1..ell}

def _word_symbols(word, i):
    return [PLUS if w == i else MINUS if w == i + 1 else DOT for w in word]


def sigma_word(word, i):
    return signature_of(_word_symbols(word, i))


def gl_e_word(word, i):
    """Replace the letter i+1 at the rightmost surviving '-' by i."""
    minus, _ = survivors(_word_symbols(word, i))
    if not minus:
        return None
    word = list(word)
    word[minus[-1]] = i
    return tuple(word)


def gl_f_word(word, i):
    """Replace the letter i at the leftmost surviving '+' by i+1."""
    _, plus = survivors(_word_symbols(word, i))
    if not plus:
        return None
    word = list(word)
    word[plus[0]] = i + 1
    return tuple(word)


# ---------------------------------------------------------------------------
# biword matrices as gl_ell crystals

def matrix_row_word(matrix):
    """The row reading word of a matrix, with matrix coordinates.

    Rows are concatenated from the largest letter down to the smallest.  An
    even row is the column tableau on its column indices (read increasingly),
    an odd row the row tableau (read decreasingly).  Returns a list of
    (column_index, letter) with 1-based column indices.
    """
    rows = {}
    for idx, col in enumerate(matrix.cols, start=1):
        for a in col:
            rows.setdefault(a, []).append(idx)
    out = []
    for a in sorted(rows, key=lambda l: -l.rank):
        indices = sorted(rows[a])
        if a.parity != EVEN:
            indices.reverse()
        out.extend((k, a) for k in indices)
    return out


def sigma_matrix(matrix, i):
    word = [k for k, _ in matrix_row_word(matrix)]
    return sigma_word(word, i)


def _matrix_move(matrix, a, src, dst):
    cols = list(matrix.cols)
    col = list(cols[src - 1])
    col.remove(a)
    cols[src - 1] = tuple(col)
    cols[dst - 1] = sorted_column(cols[dst - 1] + (a,))
    return make_matrix(cols)


def gl_e_matrix(matrix, i):
    pairs = matrix_row_word(matrix)
    minus, _ = survivors(_word_symbols([k for k, _ in pairs], i))
    if not minus:
        return None
    _, a = pairs[minus[-1]]
    return _matrix_move(matrix, a, i + 1, i)


def gl_f_matrix(matrix, i):
    pairs = matrix_row_word(matrix)
    _, plus = survivors(_word_symbols([k for k, _ in pairs], i))
    if not plus:
        return None
    _, a = pairs[plus[0]]
    return _matrix_move(matrix, a, i, i + 1)


# ---------------------------------------------------------------------------
# recording tableaux over {1..ell}

def tableau_word(q_cols):
    """Column reading word of a column-major tableau, with cell coordinates."""
    out = []
    for j in range(len(q_cols) - 1, -1, -1):
        out.extend(((i, j), q_cols[j][i]) for i in range(len(q_cols[j])))
    return out


def sigma_tableau(q_cols, i):
    word = [e for _, e in tableau_word(q_cols)]
    return sigma_word(word, i)


def _tableau_replace(q_cols, cell, value):
    i, j = cell
    cols = [list(c) for c in q_cols]
    cols[j][i] = value
    return tuple(tuple(c) for c in cols)


def gl_e_tableau(q_cols, i):
    pairs = tableau_word(q_cols)
    minus, _ = survivors(_word_symbols([e for _, e in pairs], i))
    if not minus:
        return None
    cell, _ = pairs[minus[-1]]
    return _tableau_replace(q_cols, cell, i)


def gl_f_tableau(q_cols, i):
    pairs = tableau_word(q_cols)
    _, plus = survivors(_word_symbols([e for _, e in pairs], i))
    if not plus:
        return None
    cell, _ = pairs[plus[0]]
    return _tableau_replace(q_cols, cell, i + 1)


# ---------------------------------------------------------------------------
# dispatch helpers

def _kind(obj):
    if isinstance(obj, BiwordMatrix):
        return "matrix"
    if isinstance(obj, tuple) and obj and isinstance(obj[0], tuple):
        return "tableau"
    return "word"


def gl_E(obj, i):
    """Raising operator on a word, a biword matrix, or a recording tableau."""
    return {"matrix": gl_e_matrix, "tableau": gl_e_tableau,
            "word": gl_e_word}[_kind(obj)](obj, i)


def gl_F(obj, i):
    """Lowering operator on a word, a biword matrix, or a recording tableau."""
    return {"matrix": gl_f_matrix, "tableau": gl_f_tableau,
            "word": gl_f_word}[_kind(obj)](obj, i)


def sigma(obj, i):
    return {"matrix": sigma_matrix, "tableau": sigma_tableau,
            "word": sigma_word}[_kind(obj)](obj, i)

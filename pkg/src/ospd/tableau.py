"""Semistandard tableaux over a graded alphabet, column insertion, and dual RSK.

Conventions (fixed so that single columns are exactly the columns of the
0/1-constrained biword matrices):

* columns weakly increase top to bottom; an even letter occurs at most once
  per column, odd letters may repeat;
* rows weakly increase left to right; equal neighbors are allowed only for
  even letters, odd letters are strict along rows.

Tableaux are stored column-major: a tuple of columns, each column a tuple of
letters read top to bottom.  ``S(i)`` style indexing (i-th entry from the
bottom, 1-based) is provided by :func:`entry_from_bottom`.
"""

from __future__ import annotations

from typing import NamedTuple

from .alphabet import EVEN, ODD


# ---------------------------------------------------------------------------
# columns

def column_is_valid(col):
    """Weakly increasing top to bottom, even letters strict."""
    for x, y in zip(col, col[1:]):
        if x.rank > y.rank:
            return False
        if x.rank == y.rank and x.parity == EVEN:
            return False
    return True


def entry_from_bottom(col, i):
    """The i-th entry from the bottom (1-based), or None past the top."""
    if i < 1:
        raise IndexError("bottom index is 1-based")
    if i > len(col):
        return None
    return col[len(col) - i]


def sorted_column(letters):
    """Sort letters into a column; reject invalid even repeats."""
    col = tuple(sorted(letters))
    if not column_is_valid(col):
        raise ValueError("letters %r do not form a column" % (letters,))
    return col


def row_pair_ok(x, y):
    """May x sit immediately left of y in a row?"""
    if x.rank < y.rank:
        return True
    return x.rank == y.rank and x == y and x.parity == EVEN


def column_pair_ok(x, y):
    """May x sit immediately above y in a column?"""
    if x.rank < y.rank:
        return True
    return x.rank == y.rank and x == y and x.parity == ODD


# ---------------------------------------------------------------------------
# straight and skew tableaux

def conjugate(shape):
    """Conjugate partition."""
    if not shape:
        return ()
    out = []
    for j in range(shape[0]):
        out.append(sum(1 for part in shape if part > j))
    return tuple(out)


def is_partition(shape):
    return all(a >= b >= 0 for a, b in zip(shape, shape[1:] + (0,)))


class SkewTableau(NamedTuple):
    """A filling of a skew shape outer/inner, stored row-major.

    ``rows[i]`` lists the entries of row i at columns inner[i]..outer[i]-1.
    """

    outer: tuple
    inner: tuple
    rows: tuple

    def cells(self):
        for i, row in enumerate(self.rows):
            for k, entry in enumerate(row):
                yield i, self.inner[i] + k, entry


def make_skew(outer, inner, rows):
    outer = tuple(outer)
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    if not (is_partition(outer) and is_partition(inner)):
        raise ValueError("outer and inner must be partitions")
    if len(inner) > len(outer) and any(inner[len(outer):]):
        raise ValueError("inner does not fit inside outer")
    inner = inner[:len(outer)]
    if any(a < b for a, b in zip(outer, inner)):
        raise ValueError("inner does not fit inside outer")
    rows = tuple(tuple(r) for r in rows)
    if len(rows) != len(outer) or any(len(r) != o - i for r, o, i in zip(rows, outer, inner)):
        raise ValueError("row lengths do not match the shape")
    return SkewTableau(outer, inner, rows)


def is_semistandard(t):
    """Graded semistandardness of a skew tableau."""
    grid = {}
    for i, j, entry in t.cells():
        grid[i, j] = entry
    for (i, j), x in grid.items():
        y = grid.get((i, j + 1))
        if y is not None and not row_pair_ok(x, y):
            return False
        y = grid.get((i + 1, j))
        if y is not None and not column_pair_ok(x, y):
            return False
    return True


def skew_word(t):
    """Reading word: columns right to left, top to bottom in each column."""
    cols = {}
    for i, j, entry in t.cells():
        cols.setdefault(j, []).append((i, entry))
    out = []
    for j in sorted(cols, reverse=True):
        out.extend(entry for _, entry in sorted(cols[j]))
    return tuple(out)


def letters_weight(alphabet, letters):
    from .alphabet import Weight
    counts = [0] * alphabet.size
    for a in letters:
        counts[a.rank] += 1
    return Weight(0, tuple(counts))


def cols_to_rows(cols):
    """Column-major straight tableau to row-major."""
    if not cols:
        return ()
    rows = []
    for i in range(len(cols[0])):
        rows.append(tuple(col[i] for col in cols if len(col) > i))
    return tuple(rows)


def rows_to_cols(rows):
    if not rows:
        return ()
    cols = []
    for j in range(len(rows[0])):
        cols.append(tuple(row[j] for row in rows if len(row) > j))
    return tuple(cols)


def straight_shape(cols):
    """Row lengths of a column-major straight tableau."""
    return conjugate(tuple(len(c) for c in cols))


def straight_is_semistandard(cols):
    for col in cols:
        if not column_is_valid(col):
            return False
    heights = tuple(len(c) for c in cols)
    if any(h1 < h2 for h1, h2 in zip(heights, heights[1:])):
        return False
    for j in range(len(cols) - 1):
        for i in range(len(cols[j + 1])):
            if not row_pair_ok(cols[j][i], cols[j + 1][i]):
                return False
    return True


def straight_word(cols):
    out = []
    for col in reversed(cols):
        out.extend(col)
    return tuple(out)


# ---------------------------------------------------------------------------
# two-column skew shapes lambda(a, b, c) = (2^{b+c}, 1^a)/(1^b)

class TwoColShape(NamedTuple):
    a: int
    b: int
    c: int


class TwoColumnTableau(NamedTuple):
    """Columns of a lambda(a,b,c) filling; left height a+c, right height b+c,
    the right column raised b rows above the top of the left column."""

    left: tuple
    right: tuple
    shape: TwoColShape


def make_two_column(left, right, shape):
    left, right = tuple(left), tuple(right)
    a, b, c = shape
    if min(a, b, c) < 0:
        raise ValueError("negative two-column shape")
    if len(left) != a + c or len(right) != b + c:
        raise ValueError("column heights do not match lambda(%d,%d,%d)" % shape)
    if not (column_is_valid(left) and column_is_valid(right)):
        raise ValueError("columns are not semistandard")
    return TwoColumnTableau(left, right, TwoColShape(a, b, c))


def two_column_rows(t):
    """Aligned rows (x, y) of the shape; missing cells are None."""
    a, b, c = t.shape
    rows = []
    for r in range(1, a + b + c + 1):
        x = t.left[r - b - 1] if b < r <= a + b + c else None
        y = t.right[r - 1] if r <= b + c else None
        rows.append((x, y))
    return rows


def two_column_is_semistandard(t):
    for x, y in two_column_rows(t):
        if x is not None and y is not None and not row_pair_ok(x, y):
            return False
    return True


def two_column_word(t):
    return tuple(t.right) + tuple(t.left)


def two_column_skew(t):
    """The TwoColumnTableau as a generic SkewTableau."""
    a, b, c = t.shape
    outer = (2,) * (b + c) + (1,) * a
    inner = (1,) * b
    rows = []
    for x, y in two_column_rows(t):
        rows.append(tuple(e for e in (x, y) if e is not None))
    return make_skew(outer, inner, rows)


# ---------------------------------------------------------------------------
# biword matrices

class BiwordMatrix(NamedTuple):
    """A finite A x ell matrix with entries m_{a i}, m_{a i} <= 1 for even a.

    ``cols[i]`` is the column of index i+1; column indices increase from
    right to left in the displayed matrix [m^(ell) : ... : m^(1)], so
    ``cols[0]`` is the rightmost displayed column.  Each column is stored as
    the single-column tableau listing its letters.
    """

    cols: tuple

    @property
    def ell(self):
        return len(self.cols)

    def boxes(self):
        return sum(len(c) for c in self.cols)


def make_matrix(cols):
    cols = tuple(tuple(c) for c in cols)
    for c in cols:
        if not column_is_valid(c):
            raise ValueError("matrix column %r is not a column tableau" % (c,))
    return BiwordMatrix(cols)


def matrix_from_counts(ell, entries):
    """Build from {(letter, i): count} with 1-based column index i."""
    cols = [[] for _ in range(ell)]
    for (letter, i), count in entries.items():
        if not 1 <= i <= ell:
            raise ValueError("column index %d out of range" % i)
        if count < 0 or (letter.parity == EVEN and count > 1):
            raise ValueError("bad multiplicity for %r" % (letter,))
        cols[i - 1].extend([letter] * count)
    return make_matrix(sorted_column(c) for c in cols)


# ---------------------------------------------------------------------------
# column insertion and dual RSK

def _bump_position(col, a):
    """Index of the entry bumped by inserting a, or None to append.

    An even letter bumps the topmost entry >= a; an odd letter bumps the
    topmost entry > a.
    """
    for idx, x in enumerate(col):
        if x.rank > a.rank or (x.rank == a.rank and a.parity == EVEN):
            return idx
    return None


def insert_letter(cols, a):
    """Column-insert a into a straight column-major tableau.

    Returns (new_cols, (row, col)) with the coordinates of the new cell.
    """
    cols = [list(c) for c in cols]
    j = 0
    while True:
        if j == len(cols):
            cols.append([a])
            cell = (0, j)
            break
        pos = _bump_position(cols[j], a)
        if pos is None:
            cols[j].append(a)
            cell = (len(cols[j]) - 1, j)
            break
        a, cols[j][pos] = cols[j][pos], a
        j += 1
    return tuple(tuple(c) for c in cols), cell


def insert_word(cols, letters):
    for a in letters:
        cols, _ = insert_letter(cols, a)
    return cols


def rsk(matrix):
    """Dual RSK: matrix -> (P, Q).

    P is the column insertion of the matrix columns m^(1), m^(2), ...;
    Q in SST_{1..ell}(shape(P)') records the growth, the cells created while
    inserting m^(k) being filled with k.  Both are column-major.
    """
    p_cols = ()
    q_nat = []  # same shape as P, column-major
    for k, col in enumerate(matrix.cols, start=1):
        for a in col:
            p_cols, (i, j) = insert_letter(p_cols, a)
            while j >= len(q_nat):
                q_nat.append([])
            if i != len(q_nat[j]):
                raise AssertionError("recording cell out of order")
            q_nat[j].append(k)
    # Q lives on the conjugate shape: its columns are the rows of the
    # recording filling of sh(P)
    q_cols = cols_to_rows(tuple(tuple(c) for c in q_nat))
    return p_cols, q_cols


def _reverse_bump_position(col, y):
    """Bottom-most entry of col that could have bumped y."""
    for idx in range(len(col) - 1, -1, -1):
        x = col[idx]
        if x.rank < y.rank or (x.rank == y.rank and x.parity == EVEN and x == y):
            return idx
    return None


def inverse_rsk(p_cols, q_cols, ell=None):
    """Inverse of :func:`rsk`; rejects incompatible shapes.

    ``ell`` fixes the number of matrix columns; by default the largest entry
    of Q is used, so trailing empty matrix columns are dropped.
    """
    if tuple(len(c) for c in q_cols) != straight_shape(p_cols):
        raise ValueError("sh(Q) is not the conjugate of sh(P)")
    q_nat = cols_to_rows(q_cols)  # back to the shape of P, column-major
    entries = [list(e for e in col) for col in q_nat]
    for col in entries:
        if any(not isinstance(e, int) or e < 1 for e in col):
            raise ValueError("Q must be filled with positive integers")
    top = max((e for col in entries for e in col), default=0)
    if ell is None:
        ell = top
    elif top > ell:
        raise ValueError("Q uses entries beyond ell")
    cols = [list(c) for c in p_cols]
    out = [[] for _ in range(ell)]
    for k in range(ell, 0, -1):
        cells = [(i, j) for j, col in enumerate(entries)
                 for i, e in enumerate(col) if e == k]
        cells.sort(reverse=True)
        seen_rows = set()
        for i, j in cells:
            if i in seen_rows:
                raise ValueError("entries %d of Q do not form a vertical strip" % k)
            seen_rows.add(i)
            if i != len(cols[j]) - 1 or i != len(entries[j]) - 1:
                raise ValueError("Q is not a valid recording tableau")
            carry = cols[j].pop()
            entries[j].pop()
            for jj in range(j - 1, -1, -1):
                pos = _reverse_bump_position(cols[jj], carry)
                if pos is None:
                    raise ValueError("reverse bumping failed; invalid (P, Q)")
                carry, cols[jj][pos] = cols[jj][pos], carry
            out[k - 1].append(carry)
    if any(cols):
        raise ValueError("Q does not exhaust P")
    return make_matrix(sorted_column(c) for c in out)


# ---------------------------------------------------------------------------
# JSON encoding

def letters_to_json(letters):
    return [a.name for a in letters]


def letters_from_json(alphabet, names):
    return tuple(alphabet.parse(s) for s in names)


def column_to_json(col):
    return {"col": letters_to_json(col)}


def column_from_json(alphabet, obj):
    return letters_from_json(alphabet, obj["col"])


def skew_to_json(t):
    return {
        "shape": {"outer": list(t.outer), "inner": list(t.inner)},
        "rows": [letters_to_json(row) for row in t.rows],
    }


def skew_from_json(alphabet, obj):
    return make_skew(
        tuple(obj["shape"]["outer"]),
        tuple(obj["shape"]["inner"]),
        tuple(letters_from_json(alphabet, row) for row in obj["rows"]),
    )

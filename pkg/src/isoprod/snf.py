"""Smith normal form over the integers and finitely generated abelian groups.

The elimination itself is a kernel (:mod:`isoprod._kernels`); this module
enforces the divisibility chain, orders the diagonal, and turns the result
into abelian-group invariants with a coordinate map.
"""

from dataclasses import dataclass

from . import _kernels


class IntegerMatrix:
    """Row-major matrix of Python ints (arbitrary precision)."""

    def __init__(self, rows, ncols=None):
        self.rows = [list(map(int, r)) for r in rows]
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, IntegerMatrix):
            other = other.rows
        return self.rows == [list(r) for r in other]

    def __matmul__(self, other):
        return IntegerMatrix(matmul(self.rows, _rows(other)), _ncols(other))

    def tolist(self):
        return [list(r) for r in self.rows]

    def __repr__(self):
        return f"IntegerMatrix({self.rows!r})"

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)


def _rows(M):
    return M.rows if isinstance(M, IntegerMatrix) else M


def _ncols(M):
    if isinstance(M, IntegerMatrix):
        return M.ncols
    return len(M[0]) if M else 0


def matmul(A, B):
    A, B = _rows(A), _rows(B)
    m = len(A)
    n = len(B[0]) if B else 0
    out = []
    for i in range(m):
        row = [0] * n
        for k, a in enumerate(A[i]):
            if a:
                bk = B[k]
                for j in range(n):
                    if bk[j]:
                        row[j] += a * bk[j]
        out.append(row)
    return out


def determinant(M):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = [list(r) for r in _rows(M)]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * akk - A[i][k] * A[k][j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def _xgcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


@dataclass
class SmithForm:
    """``U * M * V == D`` with ``D`` diagonal, ``d1 | d2 | ...``."""

    D: list
    U: list
    V: list
    diagonal: list  # nonzero diagonal entries, in order

    @property
    def rank(self):
        return len(self.diagonal)


def smith_normal_form(M, ncols=None, want_left=True, want_right=True):
    """Smith normal form of an integer matrix with unimodular transforms.

    ``M`` may be an :class:`IntegerMatrix` or a list of rows; pass ``ncols``
    when ``M`` has no rows.  Skipping a transform saves time on large
    relation matrices.
    """
    if isinstance(M, IntegerMatrix):
        rows, n = M.rows, M.ncols
    else:
        rows = [list(r) for r in M]
        n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    m = len(rows)
    pivots, U, V = _kernels.diagonalize(rows, n, want_left, want_right)

    units = [p for p in pivots if p[2] == 1]
    rest = sorted((p for p in pivots if p[2] != 1), key=lambda p: p[2])
    rest = [list(p) for p in rest]
    for s in range(len(rest)):
        for t in range(s + 1, len(rest)):
            rs, cs, a = rest[s]
            rt, ct, b = rest[t]
            if b % a == 0:
                continue
            g, x, y = _xgcd(a, b)
            # rows: r_s += r_t ; cols: (c_s, c_t) <- (x c_s + y c_t, -b/g c_s + a/g c_t)
            # rows: r_t -= (b*y/g) r_s
            if U is not None:
                Us, Ut = U[rs], U[rt]
                for k in range(m):
                    Us[k] += Ut[k]
                f = b * y // g
                for k in range(m):
                    Ut[k] -= f * Us[k]
            if V is not None:
                bg, ag = b // g, a // g
                for row in V:
                    vs, vt = row[cs], row[ct]
                    row[cs] = x * vs + y * vt
                    row[ct] = -bg * vs + ag * vt
            rest[s][2] = g
            rest[t][2] = a * b // g
    ordered = units + [tuple(p) for p in rest]
    diag = [p[2] for p in ordered]

    used_rows = {p[0] for p in ordered}
    used_cols = {p[1] for p in ordered}
    row_order = [p[0] for p in ordered] + [i for i in range(m) if i not in used_rows]
    col_order = [p[1] for p in ordered] + [j for j in range(n) if j not in used_cols]
    if U is not None:
        U = [U[i] for i in row_order]
    if V is not None:
        V = [[row[j] for j in col_order] for row in V]
    D = [[0] * n for _ in range(m)]
    for i, d in enumerate(diag):
        D[i][i] = d
    return SmithForm(D=D, U=U, V=V, diagonal=diag)


@dataclass
class AbelianInvariants:
    """``Z^rank + Z/d1 + ... + Z/dk`` with ``d1 | ... | dk``, ``d_i >= 2``.

    ``basis`` holds, for each canonical coordinate (torsion first, then
    free), the column of the right transform that computes it.
    """

    rank: int
    torsion: tuple
    ngens: int
    basis: tuple = ()

    def coordinates(self, vector):
        """Canonical coordinates of an exponent vector (dict or sequence)."""
        if isinstance(vector, dict):
            items = [(k, v) for k, v in vector.items() if v]
        else:
            items = [(k, v) for k, v in enumerate(vector) if v]
        out = []
        nt = len(self.torsion)
        for idx, col in enumerate(self.basis):
            s = sum(v * col[k] for k, v in items if k in col)
            out.append(s % self.torsion[idx] if idx < nt else s)
        return tuple(out)

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion]
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        return " x ".join(parts) if parts else "0"

    def as_dict(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}


def abelian_invariants(relations, ngens):
    """Invariants of ``Z^ngens / rowspace(relations)`` with coordinate map."""
    sf = smith_normal_form(relations, ncols=ngens, want_left=False, want_right=True)
    torsion = []
    basis = []
    V = sf.V
    for i, d in enumerate(sf.diagonal):
        if d > 1:
            torsion.append(d)
            basis.append(_sparse_column(V, i))
    free = list(range(sf.rank, ngens))
    for i in free:
        basis.append(_sparse_column(V, i))
    return AbelianInvariants(len(free), tuple(torsion), ngens, tuple(basis))


def _sparse_column(V, j):
    return {k: row[j] for k, row in enumerate(V) if row[j]}


def is_divisibility_chain(diag):
    return all(b % a == 0 for a, b in zip(diag, diag[1:]))


"""Exact linear algebra over an arbitrary field object.

Matrices are tuples of row tuples of field element values.  Everything is
immutable; reduction functions return new matrices.  The field object
supplies zero/one and arithmetic (see finite_field).
"""

from __future__ import annotations


def identity(F, n):
    return tuple(
        tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n)
    )


def zero_matrix(F, m, n):
    return tuple((F.zero,) * n for _ in range(m))


def mat_add(F, A, B):
    return tuple(
        tuple(F.add(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def mat_neg(F, A):
    return tuple(tuple(F.neg(a) for a in row) for row in A)


def mat_scale(F, c, A):
    return tuple(tuple(F.mul(c, a) for a in row) for row in A)


def mat_mul(F, A, B):
    if not A or not B:
        return ()
    n = len(B)
    cols = len(B[0])
    out = []
    for row in A:
        new = [F.zero] * cols
        for k in range(n):
            a = row[k]
            if a == F.zero:
                continue
            brow = B[k]
            for j in range(cols):
                new[j] = F.add(new[j], F.mul(a, brow[j]))
        out.append(tuple(new))
    return tuple(out)


def mat_vec(F, A, v):
    out = []
    for row in A:
        acc = F.zero
        for a, x in zip(row, v):
            if a != F.zero and x != F.zero:
                acc = F.add(acc, F.mul(a, x))
        out.append(acc)
    return tuple(out)


def vec_mat(F, v, A):
    if not A:
        return ()
    cols = len(A[0])
    out = [F.zero] * cols
    for x, row in zip(v, A):
        if x == F.zero:
            continue
        for j in range(cols):
            out[j] = F.add(out[j], F.mul(x, row[j]))
    return tuple(out)


def transpose(A):
    return tuple(zip(*A)) if A else ()


def dot(F, u, v):
    acc = F.zero
    for a, b in zip(u, v):
        acc = F.add(acc, F.mul(a, b))
    return acc


def rref(F, A):
    """Reduced row echelon form; returns (matrix_without_zero_rows, pivots)."""
    rows = [list(r) for r in A]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n):
        pivot_row = None
        for i in range(r, m):
            if rows[i][c] != F.zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, a) for a in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != F.zero:
                factor = rows[i][c]
                rows[i] = [
                    F.sub(a, F.mul(factor, b)) for a, b in zip(rows[i], rows[r])
                ]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return tuple(tuple(row) for row in rows[:r]), tuple(pivots)


def rank(F, A):
    return len(rref(F, A)[0])


def nullspace(F, A, n=None):
    """RREF basis of the right kernel {x : A x = 0} of an m x n matrix."""
    if n is None:
        if not A:
            raise ValueError("nullspace of an empty matrix needs explicit n")
        n = len(A[0])
    if not A:
        return identity(F, n)
    R, pivots = rref(F, A)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    basis = []
    for j in free:
        vec = [F.zero] * n
        vec[j] = F.one
        for i, pc in enumerate(pivots):
            vec[pc] = F.neg(R[i][j])
        basis.append(tuple(vec))
    if not basis:
        return ()
    return rref(F, tuple(basis))[0]


def solve(F, A, b):
    """One solution x of A x = b, or None if inconsistent."""
    n = len(A[0])
    aug = tuple(tuple(row) + (bb,) for row, bb in zip(A, b))
    R, pivots = rref(F, aug)
    x = [F.zero] * n
    for row, pc in zip(R, pivots):
        if pc == n:
            return None
        x[pc] = row[n]
    return tuple(x)


def inverse(F, A):
    n = len(A)
    aug = tuple(tuple(row) + irow for row, irow in zip(A, identity(F, n)))
    R, pivots = rref(F, aug)
    if len(R) < n or any(pivots[i] != i for i in range(n)):
        raise ZeroDivisionError("matrix is not invertible")
    return tuple(row[n:] for row in R)


def det(F, A):
    rows = [list(r) for r in A]
    n = len(rows)
    d = F.one
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if rows[i][c] != F.zero:
                pivot_row = i
                break
        if pivot_row is None:
            return F.zero
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            d = F.neg(d)
        d = F.mul(d, rows[c][c])
        inv = F.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c] != F.zero:
                factor = F.mul(rows[i][c], inv)
                rows[i] = [
                    F.sub(a, F.mul(factor, b)) for a, b in zip(rows[i], rows[c])
                ]
    return d


def row_space_equal(F, A, B):
    return rref(F, A)[0] == rref(F, B)[0]


def extend_to_basis(F, rows, n):
    """Complete independent rows to a basis of F^n with unit vectors."""
    current = list(rows)
    have = rank(F, tuple(current)) if current else 0
    for j in range(n):
        if have == n:
            break
        candidate = tuple(F.one if i == j else F.zero for i in range(n))
        trial = current + [candidate]
        if rank(F, tuple(trial)) > have:
            current.append(candidate)
            have += 1
    return tuple(current)

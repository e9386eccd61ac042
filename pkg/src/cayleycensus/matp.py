"""Dense linear algebra over prime fields F_p, vectorized with numpy.

Matrices are int64 arrays with entries reduced mod p.  Everything here is
deterministic: pivots are chosen first-nonzero in row order.
"""

from __future__ import annotations

import numpy as np


def inverse_table(p: int):
    """Multiplicative inverses mod p, index by residue (index 0 unused)."""
    table = [0] * p
    for x in range(1, p):
        table[x] = pow(x, p - 2, p)
    return table


def rref(mat, p: int):
    """Reduced row echelon form mod p; returns (matrix, pivot column list)."""
    m = np.array(mat, dtype=np.int64) % p
    if m.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = m.shape
    inv = inverse_table(p)
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        lead = r + int(nz[0])
        if lead != r:
            m[[r, lead]] = m[[lead, r]]
        m[r] = (m[r] * inv[int(m[r, c])]) % p
        hits = np.nonzero(m[:, c])[0]
        hits = hits[hits != r]
        if hits.size:
            m[hits] = (m[hits] - np.outer(m[hits, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def nullspace(mat, p: int):
    """Basis (as rows) of {x : mat @ x = 0 mod p}."""
    m = np.array(mat, dtype=np.int64) % p
    rows, cols = m.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    reduced, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-reduced[r, fc]) % p
    return basis


def reduce_mod_span(vec, reduced, pivots, p: int):
    """Residue of vec after elimination against an rref basis."""
    v = np.array(vec, dtype=np.int64) % p
    for r, c in enumerate(pivots):
        if v[c]:
            v = (v - v[c] * reduced[r]) % p
    return v


def complement_basis(space_rows, sub_rows, p: int):
    """Rows completing sub_rows to a basis of span(space_rows), in rref form."""
    sub_reduced, sub_pivots = rref(sub_rows, p) if len(sub_rows) else (
        np.zeros((0, np.array(space_rows).shape[1]), dtype=np.int64),
        [],
    )
    residues = []
    for row in np.array(space_rows, dtype=np.int64) % p:
        res = reduce_mod_span(row, sub_reduced, sub_pivots, p)
        if res.any():
            residues.append(res)
    if not residues:
        return np.zeros((0, np.array(space_rows).shape[1]), dtype=np.int64)
    comp, _ = rref(np.array(residues), p)
    return comp

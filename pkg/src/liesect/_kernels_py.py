"""Pure-Python/numpy implementations of the hot integer kernels.

The compiled extension in ``_kernels.pyx`` exposes the same three functions;
``liesect.kernels`` picks whichever is importable.  Everything here is exact
integer arithmetic: Weyl elements are small integer matrices in the
simple-root basis (entries fit in int8 for every type of rank <= 8, products
are accumulated in int16).
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


class EnumerationBound(RuntimeError):
    """Raised when a group enumeration would exceed the configured bound."""


def weyl_enumerate(gens: np.ndarray, limit: int) -> np.ndarray:
    """BFS closure of the group generated by ``gens`` (k, n, n) int8.

    Returns all elements as an (N, n, n) int8 array, identity first, in a
    deterministic (BFS, byte-sorted levels) order.  Raises EnumerationBound
    if more than ``limit`` elements are found.
    """
    n = gens.shape[1]
    ident = np.eye(n, dtype=np.int8)
    seen = {ident.tobytes(): 0}
    elements = [ident]
    frontier = ident[np.newaxis]
    g16 = gens.astype(np.int16)
    while len(frontier):
        new_mats = []
        for start in range(0, len(frontier), 32768):
            block = frontier[start : start + 32768].astype(np.int16)
            # (F, k, n, n) products of every frontier element by every generator
            prod = np.einsum("fij,gjk->fgik", block, g16).reshape(-1, n, n)
            new_mats.append(prod.astype(np.int8))
        cand = np.concatenate(new_mats) if new_mats else np.empty((0, n, n), np.int8)
        fresh = []
        for m in cand:
            key = m.tobytes()
            if key not in seen:
                seen[key] = len(elements)
                elements.append(m.copy())
                fresh.append(m.copy())
                if len(elements) > limit:
                    raise EnumerationBound(
                        f"group has more than {limit} elements"
                    )
        frontier = np.array(fresh, dtype=np.int8) if fresh else np.empty((0, n, n), np.int8)
    return np.stack(elements)


def conjugacy_classes(elements: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """Label each element with the index of its conjugacy-class representative.

    ``elements`` must be closed under the group operation (the full group).
    Classes are computed by orbit BFS under conjugation by the generators.
    """
    n = elements.shape[1]
    index = {m.tobytes(): i for i, m in enumerate(elements)}
    labels = np.full(len(elements), -1, dtype=np.int64)
    g16 = gens.astype(np.int16)
    ginv16 = np.stack([_int_inverse(g) for g in gens]).astype(np.int16)
    for rep in range(len(elements)):
        if labels[rep] != -1:
            continue
        labels[rep] = rep
        frontier = [rep]
        while frontier:
            mats = elements[frontier].astype(np.int16)
            nxt = []
            for gi in range(len(gens)):
                conj = (ginv16[gi] @ mats @ g16[gi]).astype(np.int8)
                for m in conj:
                    j = index[m.tobytes()]
                    if labels[j] == -1:
                        labels[j] = rep
                        nxt.append(j)
            frontier = nxt
    return labels


def _int_inverse(mat: np.ndarray) -> np.ndarray:
    """Exact inverse of an integer matrix with det +-1."""
    from fractions import Fraction

    n = mat.shape[0]
    a = [[Fraction(int(mat[i, j])) for j in range(n)] for i in range(n)]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    out = np.array([[int(x) for x in row] for row in inv], dtype=np.int8)
    return out


def gram_backtrack(candidates, gram, target):
    """All tuples (r_0..r_{n-1}) with r_i in candidates[i] and
    gram[r_i][r_j] == target[i][j] for all j <= i.

    ``gram`` is the (doubled) inner-product table of all roots, ``target`` the
    (doubled) Gram matrix of the simple roots in slot order.  Pure integer DFS.
    """
    n = len(candidates)
    gram = [list(map(int, row)) for row in gram]
    target = [list(map(int, row)) for row in target]
    out = []
    chosen = [0] * n

    def rec(i):
        if i == n:
            out.append(tuple(chosen))
            return
        ti = target[i]
        for r in candidates[i]:
            grow = gram[r]
            if grow[r] != ti[i]:
                continue
            ok = True
            for j in range(i):
                if grow[chosen[j]] != ti[j]:
                    ok = False
                    break
            if ok:
                chosen[i] = r
                rec(i + 1)

    rec(0)
    return out

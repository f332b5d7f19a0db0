"""NumPy implementations of the hot kernels.

Same call signatures as the compiled module ``starcomm._core``; the backend
selector picks whichever is available. Element sets are int32 matrices with
one image row per permutation, kept sorted lexicographically (the canonical
order used everywhere downstream). Multiplication tables are int32 squares
with ``table[i, j]`` the index of row-i composed-then row-j.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "python"

# Cap on the number of (left, right) cells materialized per vectorized block.
_BLOCK_CELLS = 1 << 22


def _sort_rows(rows: np.ndarray) -> np.ndarray:
    order = np.lexsort(rows.T[::-1])
    return np.ascontiguousarray(rows[order])


def _row_index(rows: np.ndarray) -> dict[bytes, int]:
    return {row.tobytes(): i for i, row in enumerate(rows)}


def closure_images(gens: np.ndarray, cap: int) -> tuple[np.ndarray, bool]:
    """Breadth-first closure of generator rows under composition.

    Returns (rows sorted lexicographically, truncated flag). The closure
    always contains the identity. When the closure would exceed ``cap``,
    enumeration stops at ``cap`` rows with the flag set.
    """
    gens = np.ascontiguousarray(gens, dtype=np.int32)
    degree = gens.shape[1]
    identity = np.arange(degree, dtype=np.int32)
    rows = [identity]
    seen = {identity.tobytes()}
    truncated = False
    frontier = [identity]
    gen_rows = [np.ascontiguousarray(g) for g in gens]
    while frontier and not truncated:
        block = np.array(frontier, dtype=np.int32)
        frontier = []
        for g in gen_rows:
            composed = g[block]
            for row in composed:
                key = row.tobytes()
                if key in seen:
                    continue
                if len(rows) >= cap:
                    truncated = True
                    break
                seen.add(key)
                row = np.ascontiguousarray(row)
                rows.append(row)
                frontier.append(row)
            if truncated:
                break
    return _sort_rows(np.array(rows, dtype=np.int32)), truncated


def find_rows(elements: np.ndarray, queries: np.ndarray) -> np.ndarray:
    """Indices of query rows inside the sorted element matrix (-1 if absent)."""
    lookup = _row_index(elements)
    queries = np.ascontiguousarray(queries, dtype=np.int32)
    out = np.empty(len(queries), dtype=np.int64)
    for i, row in enumerate(queries):
        out[i] = lookup.get(row.tobytes(), -1)
    return out


def mult_table(elements: np.ndarray, generators: np.ndarray) -> np.ndarray:
    """Full multiplication table over the sorted element matrix.

    Row searches happen only for the generator columns; every other column
    j is filled through a factorization j = parent * generator found by
    breadth-first search, so the bulk of the table costs two array lookups
    per entry regardless of the degree.
    """
    elements = np.ascontiguousarray(elements, dtype=np.int32)
    n = len(elements)
    lookup = _row_index(elements)
    generators = np.ascontiguousarray(generators, dtype=np.int32).reshape(
        -1, elements.shape[1]
    )
    gen_cols: dict[int, np.ndarray] = {}
    gen_index: list[int] = []
    for g_row in generators:
        jg = lookup[g_row.tobytes()]
        gen_index.append(jg)
        if jg not in gen_cols:
            products = g_row[elements]  # row i composed-then g
            gen_cols[jg] = np.array(
                [lookup[row.tobytes()] for row in products], dtype=np.int32
            )
    table = np.empty((n, n), dtype=np.int32)
    table[:, 0] = np.arange(n, dtype=np.int32)
    for jg, col in gen_cols.items():
        table[:, jg] = col
    done = np.zeros(n, dtype=bool)
    done[0] = True
    done[list(gen_cols)] = True
    order_found = [0] + list(gen_cols)
    head = 0
    while head < len(order_found):
        j = order_found[head]
        head += 1
        for jg in gen_cols:
            y = int(table[j, jg])
            if not done[y]:
                done[y] = True
                table[:, y] = table[:, jg][table[:, j]]
                order_found.append(y)
    if not done.all():
        raise ValueError("generators do not generate the element set")
    return table


def element_orders(elements: np.ndarray) -> np.ndarray:
    """Element orders (lcm of cycle lengths) per image row."""
    n, degree = elements.shape
    out = np.empty(n, dtype=np.int64)
    for i in range(n):
        row = elements[i]
        seen = bytearray(degree)
        order = 1
        for start in range(degree):
            if seen[start]:
                continue
            length = 1
            seen[start] = 1
            q = row[start]
            while q != start:
                seen[q] = 1
                length += 1
                q = row[q]
            order = math.lcm(order, length)
        out[i] = order
    return out


def index_closure(table: np.ndarray, seed: np.ndarray) -> np.ndarray:
    """Sorted indices of the subgroup generated by the seed indices."""
    n = len(table)
    member = np.zeros(n, dtype=bool)
    member[0] = True
    seed = np.unique(np.asarray(seed, dtype=np.int64))
    if len(seed) == 0:
        return np.array([0], dtype=np.int64)
    frontier = np.array([0], dtype=np.int64)
    while len(frontier):
        products = np.unique(table[np.ix_(frontier, seed)])
        fresh = products[~member[products]]
        member[fresh] = True
        frontier = fresh
    return np.flatnonzero(member).astype(np.int64)


def commutator_mask(
    table: np.ndarray,
    inv: np.ndarray,
    orders: np.ndarray,
    left: np.ndarray,
    right: np.ndarray,
    coprime_only: bool,
) -> np.ndarray:
    """Membership mask of {[a, b] : a in left, b in right}.

    With ``coprime_only`` the sweep keeps only pairs with coprime element
    orders, skipping non-coprime order buckets wholesale.
    """
    n = len(table)
    mask = np.zeros(n, dtype=bool)
    left = np.asarray(left, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    if len(left) == 0 or len(right) == 0:
        return mask
    if coprime_only:
        buckets = []
        left_orders = [(o, left[orders[left] == o]) for o in np.unique(orders[left])]
        right_orders = [(o, right[orders[right] == o]) for o in np.unique(orders[right])]
        for o1, sub_a in left_orders:
            for o2, sub_b in right_orders:
                if math.gcd(int(o1), int(o2)) == 1:
                    buckets.append((sub_a, sub_b))
    else:
        buckets = [(left, right)]
    inv = np.asarray(inv, dtype=np.int64)
    for sub_a, sub_b in buckets:
        step = max(1, _BLOCK_CELLS // max(1, len(sub_b)))
        for lo in range(0, len(sub_a), step):
            a = sub_a[lo : lo + step]
            t1 = table[np.ix_(inv[a], inv[sub_b])]
            t2 = table[t1, a[:, None]]
            values = table[t2, sub_b[None, :]]
            mask[values.ravel()] = True
    return mask


def conjugacy_min_reps(table: np.ndarray, inv: np.ndarray) -> np.ndarray:
    """Per element, the minimal index in its conjugacy class."""
    n = len(table)
    labels = np.full(n, -1, dtype=np.int64)
    all_idx = np.arange(n)
    inv = np.asarray(inv, dtype=np.int64)
    for x in range(n):
        if labels[x] != -1:
            continue
        orbit = np.unique(table[table[inv, x], all_idx])
        labels[orbit] = x
    return labels

"""Backtracking isomorphism search and map verification for (partial) tables with a unary map.

Tables use -1 for an undefined product, so total semigroups and constellations share
one search. Assigning x ↦ y propagates: once a and b are mapped, a∘b is forced.
"""

import logging
from collections.abc import Sequence

import numpy as np

from .config import search_budget
from .errors import SearchBudgetExceeded
from .laws import LawReport

logger = logging.getLogger(__name__)

Signature = tuple[int, ...]


def _signatures(table: np.ndarray, unary: np.ndarray) -> list[Signature]:
    n = table.shape[0]
    idx = np.arange(n)
    defined = table != -1
    fiber = np.bincount(unary, minlength=n)[unary]
    return [
        tuple(int(v) for v in row)
        for row in zip(
            unary == idx,
            defined.sum(axis=1),
            defined.sum(axis=0),
            table[idx, idx] == idx,
            fiber,
            (table == idx[:, None]).sum(axis=1),
            (table == idx[None, :]).sum(axis=0),
            strict=True,
        )
    ]


def find_isomorphism(
    a_table: np.ndarray,
    a_unary: np.ndarray | None,
    b_table: np.ndarray,
    b_unary: np.ndarray | None,
    budget: int | None = None,
) -> list[int] | None:
    """A bijection preserving definedness, products and the unary map, or None.

    Raises:
        SearchBudgetExceeded: When more than ``budget`` candidate assignments are tried.
    """
    n = a_table.shape[0]
    if b_table.shape[0] != n:
        return None
    limit = budget if budget is not None else search_budget()
    ua_arr = np.asarray(a_unary if a_unary is not None else np.arange(n), dtype=np.int64)
    ub_arr = np.asarray(b_unary if b_unary is not None else np.arange(n), dtype=np.int64)
    sig_a = _signatures(np.asarray(a_table), ua_arr)
    sig_b = _signatures(np.asarray(b_table), ub_arr)
    if sorted(sig_a) != sorted(sig_b):
        return None
    a = np.asarray(a_table).tolist()
    b = np.asarray(b_table).tolist()
    ua, ub = ua_arr.tolist(), ub_arr.tolist()
    candidates = {x: [y for y in range(n) if sig_b[y] == sig_a[x]] for x in range(n)}
    # domain elements first, then the most constrained
    order = sorted(range(n), key=lambda x: (ua[x] != x, len(candidates[x]), x))

    phi = [-1] * n
    used = [False] * n
    assigned: list[int] = []

    def undo(count: int) -> None:
        for _ in range(count):
            x = assigned.pop()
            used[phi[x]] = False
            phi[x] = -1

    def assign(x: int, y: int) -> tuple[bool, int]:
        added = 0
        queue = [(x, y)]
        while queue:
            p, q = queue.pop()
            if phi[p] != -1:
                if phi[p] != q:
                    return False, added
                continue
            if used[q] or sig_a[p] != sig_b[q]:
                return False, added
            phi[p] = q
            used[q] = True
            assigned.append(p)
            added += 1
            queue.append((ua[p], ub[q]))
            for z in assigned:
                w = phi[z]
                for left, right, left_b, right_b in ((p, z, q, w), (z, p, w, q)):
                    value = a[left][right]
                    image = b[left_b][right_b]
                    if (value == -1) != (image == -1):
                        return False, added
                    if value != -1:
                        queue.append((value, image))
        return True, added

    def next_open(start: int) -> int:
        k = start
        while k < n and phi[order[k]] != -1:
            k += 1
        return k

    nodes = 0
    stack = [[0, iter(candidates[order[0]]), 0]]
    while stack:
        frame = stack[-1]
        if frame[2]:
            undo(frame[2])
            frame[2] = 0
        x = order[frame[0]]
        advanced = False
        for y in frame[1]:
            if used[y]:
                continue
            nodes += 1
            if nodes > limit:
                raise SearchBudgetExceeded(limit)
            ok, added = assign(x, y)
            if not ok:
                undo(added)
                continue
            frame[2] = added
            k = next_open(frame[0] + 1)
            if k == n:
                logger.debug("isomorphism found after %d nodes", nodes)
                return list(phi)
            stack.append([k, iter(candidates[order[k]]), 0])
            advanced = True
            break
        if not advanced:
            stack.pop()
    logger.debug("no isomorphism after %d nodes", nodes)
    return None


def check_map(
    a_table: np.ndarray,
    a_unary: np.ndarray | None,
    b_table: np.ndarray,
    b_unary: np.ndarray | None,
    phi: Sequence[int] | np.ndarray,
    bijective: bool = True,
    subject: str = "map",
) -> LawReport:
    """Verify phi element by element: products, definedness, unary map, and either
    bijectivity or surjectivity."""
    phi_arr = np.asarray(phi, dtype=np.int64)
    a_tab = np.asarray(a_table)
    b_tab = np.asarray(b_table)
    m = b_tab.shape[0]
    report = LawReport(subject=subject)
    hits = np.bincount(phi_arr, minlength=m)
    if bijective:
        report.add("bijective", hits != 1)
    else:
        report.add("surjective", hits == 0)
    extended = np.append(phi_arr, -1)
    mapped = extended[a_tab]
    target = b_tab[phi_arr[:, None], phi_arr[None, :]]
    report.add("definedness", (a_tab == -1) != (target == -1))
    report.add("products", (a_tab != -1) & (mapped != target))
    if a_unary is not None and b_unary is not None:
        ua = np.asarray(a_unary)
        ub = np.asarray(b_unary)
        report.add("unary", phi_arr[ua] != ub[phi_arr])
    return report

"""Pure-Python edit-distance kernels.

Same contract as the compiled module: Damerau-Levenshtein distance in the
optimal-string-alignment variant (insertions, deletions, substitutions and
adjacent transpositions, each costing 1).
"""

from __future__ import annotations


def damerau_levenshtein(a: str, b: str) -> int:
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la

    prev2 = [0] * (lb + 1)
    prev = list(range(lb + 1))
    cur = [0] * (lb + 1)

    for i in range(1, la + 1):
        cur[0] = i
        ai = a[i - 1]
        for j in range(1, lb + 1):
            cost = 0 if ai == b[j - 1] else 1
            d = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
            if i > 1 and j > 1 and ai == b[j - 2] and a[i - 2] == b[j - 1]:
                d = min(d, prev2[j - 2] + 1)
            cur[j] = d
        prev2, prev, cur = prev, cur, prev2

    return prev[lb]


def damerau_levenshtein_many(hint: str, forms: list[str]) -> list[int]:
    """Distance from ``hint`` to each form; one call per query keeps the
    compiled version's per-call overhead out of the scan loop."""
    return [damerau_levenshtein(hint, f) for f in forms]

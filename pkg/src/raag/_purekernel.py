"""Pure-Python word normalization via the piling construction.

A word over a partially commutative alphabet is pushed letter by letter
onto per-generator stacks ("piles"): pushing generator i appends a signed
entry to pile i and a zero marker to every pile of a generator that does
not commute with i. When the incoming letter finds its own inverse on top
of its pile, only commuting letters separate the two occurrences, so the
pair cancels and its footprint is popped. The result after one pass is a
maximally cancelled (reduced) word.

Depiling then emits, at every step, the smallest available generator
(front of its pile holds a real letter, i.e. no earlier non-commuting
letter remains). This yields the lexicographically least reduced word of
the commutation class, which is the canonical form used for equality
tests throughout the package.

This module mirrors raag._speedups exactly; the compiled module is
preferred when available.
"""


def normalize(codes, n, noncomm):
    """Canonical reduced form of a word.

    codes: sequence of signed generator codes, +(i+1) for generator i,
        -(i+1) for its inverse.
    n: number of generators.
    noncomm: per generator index, the indices of the *distinct*
        non-adjacent (non-commuting) generators.

    Returns the canonical word as a list of signed codes: reduced, and
    smallest in letter order (generator index ascending) among all
    commutation-equivalent reduced words.
    """
    piles = [[] for _ in range(n)]
    count = 0
    for c in codes:
        if c > 0:
            i = c - 1
            eps = 1
        else:
            i = -c - 1
            eps = -1
        p = piles[i]
        if p and p[-1] == -eps:
            p.pop()
            for j in noncomm[i]:
                piles[j].pop()
            count -= 1
        else:
            p.append(eps)
            for j in noncomm[i]:
                piles[j].append(0)
            count += 1
    out = []
    ptr = [0] * n
    while count:
        for i in range(n):
            k = ptr[i]
            p = piles[i]
            if k < len(p) and p[k]:
                out.append((i + 1) * p[k])
                ptr[i] = k + 1
                for j in noncomm[i]:
                    ptr[j] += 1
                count -= 1
                break
    return out

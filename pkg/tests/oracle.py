"""Independent straight-line reference implementation used only by tests.

Deliberately shares no code with the package: plain loops, plain math. Any
disagreement between this transcription and the numpy pipeline is a bug in
one of them.
"""

import math


def reference_scores(values, polarities, weights, dim_sizes):
    """Score a raw matrix the long way.

    values: list of n rows, each a list of m floats
    polarities: list of m strings, "benefit" or "cost"
    weights: list of m positive floats summing to 1
    dim_sizes: list of dimension lengths, summing to m

    Returns one dict per alternative with per-dimension "strong" and "weak"
    lists and the overall "gamma" (lower, upper) pair.
    """
    n = len(values)
    m = len(values[0])
    assert sum(dim_sizes) == m

    # column normalization
    norms = []
    for j in range(m):
        s = 0.0
        for i in range(n):
            s += values[i][j] * values[i][j]
        norms.append(math.sqrt(s))
    weighted = [[weights[j] * values[i][j] / norms[j] for j in range(m)] for i in range(n)]

    # ideal / anti-ideal per column
    v_plus, v_minus = [], []
    for j in range(m):
        col = [weighted[i][j] for i in range(n)]
        if polarities[j] == "benefit":
            v_plus.append(max(col))
            v_minus.append(min(col))
        else:
            v_plus.append(min(col))
            v_minus.append(max(col))

    # column ranges of each dimension
    starts = []
    s = 0
    for size in dim_sizes:
        starts.append(s)
        s += size

    results = []
    for i in range(n):
        strongs, weaks = [], []
        for start, size in zip(starts, dim_sizes):
            cols = range(start, start + size)
            d_plus = [abs(weighted[i][j] - v_plus[j]) for j in cols]
            d_minus = [abs(weighted[i][j] - v_minus[j]) for j in cols]
            strong_plus = max(d_plus)
            strong_minus = min(d_minus)
            weak_plus = sum(d_plus) / size
            weak_minus = sum(d_minus) / size
            strongs.append(strong_minus / (strong_plus + strong_minus))
            weaks.append(weak_minus / (weak_plus + weak_minus))
        gamma = (min(weaks), sum(weaks) / len(weaks))
        results.append({"strong": strongs, "weak": weaks, "gamma": gamma})
    return results

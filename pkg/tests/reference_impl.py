"""Independent brute-force transcription of the spacing statistic.

Kept deliberately naive and free of any package code so it can serve as an
oracle: 1-based indices, plain Python floats, sums in index order.
"""


def naive_spacing_statistic(values, m):
    xs = sorted(float(v) for v in values)
    n = len(xs)
    ys = []
    for i in range(1, n + 1):
        upper = xs[min(i + m, n) - 1]
        lower = xs[max(i - m, 1) - 1]
        ys.append((2.0 * m / n) / (upper - lower))
    first = sum(y * y for y in ys) / (4.0 * n)
    second = (sum(ys) / n) ** 2 / 4.0
    return first - second

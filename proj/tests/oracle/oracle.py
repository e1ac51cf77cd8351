"""Independent numpy recomputation of the frozen values used by the C++ tests.

Run: python3 tests/oracle/oracle.py
"""
import itertools
import numpy as np

TABLE1 = np.array([
    [3.53, 3.64, 4.09, 3.82, 3.91, 3.48, 3.79, 3.23, 3.8, 3.93, 4.13],
    [4.08, 3.8, 3.52, 3.61, 3.46, 3.28, 3.3, 3.94, 3.66, 3.59, 3.84],
    [3.5, 4.11, 3.92, 3.66, 4.05, 3.87, 3.84, 4.12, 3.92, 4.11, 3.3],
    [3.35, 3.76, 3.15, 3.31, 3.94, 3.62, 3.79, 3.44, 3.46, 4.07, 3.93],
    [4.13, 3.3, 3.94, 3.8, 3.96, 4.13, 3.55, 3.43, 3.2, 0.92, 0.82],
    [1.03, 0.95, 0.92, 0.91, 1.25, 1.04, 0.95, 1.16, 0.95, 1.01, 1.11],
    [1, 0.99, 0.93, 1.05, 0.96, 0.93, 1.02, 0.88, 1.22, 1.15, 0.91],
    [1.23, 1.01, 0.8, 1.32, 1.67, 0.89, 0.98, 0.96, 0.91, 0.93, 0.92],
    [0.96, 0.96, 1.04, 1.2, 1.67, 0.87, 0.96, 0.98, 0.95, 0.97, 0.91],
])
BENEFIT = np.array([False] * 3 + [True] * 8)
PUB_CI = np.array([0.619168, 0.605111, 0.619405, 0.64902, 0.477346, 0.387313,
                   0.383884, 0.385416, 0.383628, 0.351176, 0.478147])
PUB_RANK = np.array([3, 4, 2, 1, 6, 7, 9, 8, 10, 11, 5])


def vnorm(x):
    return x / np.sqrt((x ** 2).sum(axis=0))


def sd_w(x):
    s = x.std(axis=0, ddof=1)
    return s / s.sum()


def ent_w(x):
    p = x / x.sum(axis=0)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(p > 0, p * np.log(p), 0.0)
    e = -t.sum(axis=0) / np.log(x.shape[0])
    d = 1 - e
    return d / d.sum()


def topsis(x, w, benefit):
    v = vnorm(x) * w
    best = np.where(benefit, v.max(0), v.min(0))
    worst = np.where(benefit, v.min(0), v.max(0))
    sp = np.sqrt(((v - best) ** 2).sum(1))
    sm = np.sqrt(((v - worst) ** 2).sum(1))
    c = sm / (sp + sm)
    order = sorted(range(len(c)), key=lambda i: (-c[i], i))
    r = np.empty(len(c), int)
    r[order] = np.arange(1, len(c) + 1)
    return sp, sm, c, r


def tau(a, b):
    n = len(a)
    s = 0
    for i, j in itertools.combinations(range(n), 2):
        s += np.sign(a[i] - a[j]) * np.sign(b[i] - b[j])
    return s / (n * (n - 1) / 2)


np.set_printoptions(precision=17)
print("sd weights normalized basis, Table 1:", repr(sd_w(vnorm(TABLE1))))
print("sd weights raw basis, Table 1:", repr(sd_w(TABLE1)))
print("normalized col 0:", repr(vnorm(TABLE1)[:, 0]))
print("entropy [1,2,3],[1,1,2]:", repr(ent_w(np.array([[1., 1], [2, 1], [3, 2]]))))

w = sd_w(vnorm(TABLE1))
sp, sm, c, r = topsis(TABLE1, w, BENEFIT)
print("as printed std_dev normalized: closeness", repr(c), "ranks", r)

methods = {
    "StdDevRaw": sd_w,
    "StdDevNormalized": lambda x: sd_w(vnorm(x)),
    "Equal": lambda x: np.full(x.shape[1], 1 / x.shape[1]),
    "Entropy": ent_w,
}
for subset, rows in (("AllRows", slice(None)), ("Rows1to5", slice(0, 5))):
    x = TABLE1[rows].T
    for name, f in methods.items():
        sp, sm, c, r = topsis(x, f(x), np.ones(x.shape[1], bool))
        d = np.abs(c - PUB_CI)
        print(f"Transposed/{name}/{subset}: max={d.max()!r} mean={d.mean()!r} "
              f"exact={(r == PUB_RANK).sum()} tau={tau(r, PUB_RANK)!r}")


def rerank(values):
    """Rank descending with index tie-break (same rule as the library)."""
    order = sorted(range(len(values)), key=lambda i: (-values[i], i))
    r = np.empty(len(values), int)
    r[order] = np.arange(1, len(values) + 1)
    return r


print("\n# sweep, rows compared by position over the common prefix")
for orientation in ("AsPrinted", "Transposed"):
    for name, f in methods.items():
        for subset, rows in (("AllRows", slice(None)), ("Rows1to5", slice(0, 5))):
            if orientation == "AsPrinted" and subset == "Rows1to5":
                continue
            if orientation == "AsPrinted":
                x, ben = TABLE1, BENEFIT
            else:
                x = TABLE1[rows].T
                ben = np.ones(x.shape[1], bool)
            sp, sm, c, r = topsis(x, f(x), ben)
            k = min(len(c), len(PUB_CI))
            d = np.abs(c[:k] - PUB_CI[:k])
            pub_r = rerank(PUB_CI[:k])
            print(f"{orientation}/{name}/{subset}: rows={k} max={d.max()!r} "
                  f"mean={d.mean()!r} exact={(r[:k] == pub_r).sum()} "
                  f"tau={tau(c[:k], PUB_CI[:k])!r}")

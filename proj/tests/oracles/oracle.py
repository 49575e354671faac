"""Independent Python oracle for frozen test values.

Re-derives the product side, the gap-condition partition counts and the
monomial-ideal quotient dimensions by the most literal means available
(plain enumeration), without sharing any code path with the C++ library.
"""
import itertools
import sys


def partitions(n, min_part=1, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), min_part - 1, -1):
        for rest in partitions(n - p, min_part, p):
            yield (p,) + rest


def allowed_c(r, idx, n):
    out = []
    for m in range(1, n + 1):
        if m % 4 == 2 or m % (4 * r) == 0:
            continue
        if m % (4 * r) in ((2 * r + 2 * idx - 1) % (4 * r), (2 * r - 2 * idx + 1) % (4 * r)):
            continue
        out.append(m)
    return out


def count_parts_from(n, parts):
    s = set(parts)
    return sum(1 for p in partitions(n) if all(x in s for x in p))


def gap_ok(p, r, i, J):
    s = len(p)
    for a, b in zip(p, p[1:]):
        if a == b and a % 2 == 1:
            return False
    for m in range(s - r + 1):
        d = p[m] - p[m + r - 1]
        if d < (2 if p[m] % 2 else 3):
            return False
    if any(x <= 2 * J for x in p):
        return False
    if sum(1 for x in p if x in (2 * J + 1, 2 * J + 2)) > i - 1:
        return False
    return True


def count_e(r, i, J, n):
    return sum(1 for p in partitions(n) if gap_ok(p, r, i, J))


# --- monomial ideals: monomials are tuples of (var, exp) sorted by var ---

def mono(**kw):
    raise NotImplementedError


def divides(a, b):
    db = dict(b)
    return all(db.get(v, 0) >= e for v, e in a)


def weight(m):
    return sum(v * e for v, e in m)


def mk(*pairs):
    d = {}
    for v, e in pairs:
        if e:
            d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def minimal(gens):
    gens = set(gens)
    return sorted((g for g in gens if not any(h != g and divides(h, g) for h in gens)),
                  key=lambda m: (weight(m), m))


def families(lo, r, N):
    g = []
    for o in range(lo, N + 1):
        if o % 2 == 1:
            g.append(mk((o, 2)))
            g.append(mk((o, 1), (o + 1, r - 1)))
        else:
            for n1 in range(r):
                g.append(mk((o, r - n1), (o + 2, n1)))
            for n2 in range(r - 1):
                g.append(mk((o, r - n2 - 1), (o + 1, 1), (o + 2, n2)))
    return g


def L_riJ(r, i, J, N):
    b = 2 * J + 1
    g = [mk((b, 2)), mk((b, 1), (b + 1, i - 1)), mk((b + 1, i))] + families(2 * J + 2, r, N)
    return minimal(x for x in g if weight(x) <= N)


def L_k(k, r, N):
    return minimal(x for x in families(k, r, N) if weight(x) <= N)


def L_k_ell(k, ell, r, N):
    if k % 2 == 1:
        g = [mk((k, 2)), mk((k, 1), (k + 1, ell - 1))] + L_k_ell(k + 1, ell, r, N)
    else:
        g = [mk((k, ell))]
        g += [mk((k, ell - j), (k + 2, r - ell + j)) for j in range(1, ell)]
        g += [mk((k, ell - 1 - j), (k + 1, 1), (k + 2, r - ell + j)) for j in range(0, ell - 1)]
        g += L_k(k + 1, r, N)
    return minimal(x for x in g if weight(x) <= N)


def hp(gens, min_var, N):
    out = []
    for j in range(N + 1):
        c = 0
        for p in partitions(j, min_var):
            m = mk(*[(x, 1) for x in p])
            if not any(divides(g, m) for g in gens):
                c += 1
        out.append(c)
    return out


def text(m):
    if not m:
        return "1"
    return "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in m)


# --- q-series side ---

def prod_series(parts, N):
    c = [1] + [0] * N
    for m in parts:
        for j in range(m, N + 1):
            c[j] += c[j - m]
    return c


def c_series(r, index, N, pad=400):
    W = N + pad
    row = {k: prod_series(allowed_c(r, k, W), W) for k in range(1, r + 1)}
    g = 1
    while max(row) < index:
        row[(r - 1) * g + 1] = row[(r - 1) * (g - 1) + r]
        for i in range(2, r + 1):
            e = 2 * g * (i - 1)
            a = row[(r - 1) * (g - 1) + r - i + 1]
            b = row[(r - 1) * (g - 1) + r - i + 2]
            prev = row[(r - 1) * g + i - 1]
            num = [a[j] - b[j] - (prev[j - e + 1] if j >= e - 1 else 0) for j in range(len(a))]
            assert all(x == 0 for x in num[:e]), (r, g, i)
            row[(r - 1) * g + i] = num[e:]
        g += 1
        L = min(len(v) for v in row.values())
        row = {k: v[:L] for k, v in row.items()}
    return row[index][:N + 1]


def main():
    print("p {1,4,7} N=6", prod_series([1, 4, 7], 6))
    print("p {3,4,5} N=7", prod_series([3, 4, 5], 7))
    print("allowed r3 idx2", allowed_c(3, 2, 12))
    print("C22(5), C22(8)", count_parts_from(5, [1, 4]), count_parts_from(8, [1, 4, 7]))
    print("D22(5),(6)", count_e(2, 2, 0, 5), count_e(2, 2, 0, 6), "D21(1)", count_e(2, 1, 0, 1))
    print("E221(7)", count_e(2, 2, 1, 7))
    print("E210 N3", [count_e(2, 1, 0, n) for n in range(4)])
    print("C22 0..8", [count_parts_from(n, allowed_c(2, 1, 8)) for n in range(9)])
    print("std(x1) j=3", hp([mk((1, 1))], 1, 3))
    print("hp(x1^2) N=2", hp([mk((1, 2))], 1, 2))
    print("L_220 N=8", [text(g) for g in L_riJ(2, 2, 0, 8)])
    print("L_2;1,20 N=20", [text(g) for g in L_riJ(2, 2, 0, 20)])
    print("hp L_220 N=20", hp(L_riJ(2, 2, 0, 20), 1, 20))
    # N3 as ideal equality, main theorem at small N
    for r in (2, 3):
        for i in range(1, r + 1):
            for J in (0, 1):
                N = 16
                assert L_riJ(r, i, J, N) == L_k_ell(2 * J + 1, i, r, N), (r, i, J)
                e = [count_e(r, i, J, n) for n in range(N + 1)]
                h = hp(L_riJ(r, i, J, N), 2 * J + 1, N)
                c = c_series(r, (r - 1) * J + r - i + 1, N)
                assert e == h == c, (r, i, J, e, h, c)
    print("main theorem small-N: ok")


def series_json(coeffs):
    return {"trunc": len(coeffs) - 1, "coeffs": [str(c) for c in coeffs]}


def write_fixtures(directory):
    import json
    import os

    c22 = [count_parts_from(n, allowed_c(2, 1, 8)) for n in range(9)]
    with open(os.path.join(directory, "c22_first9.json"), "w") as f:
        f.write(json.dumps(series_json(c22), separators=(",", ":")) + "\n")

    r, i, J, N = 2, 2, 0, 20
    gens = L_riJ(r, i, J, N)
    series = series_json(hp(gens, 2 * J + 1, N))
    dump = {
        "family": "LriJ",
        "params": {"r": r, "i": i, "J": J},
        "ideal": {"min_var": 2 * J + 1, "trunc": N, "gens": [text(g) for g in gens]},
        "hp_brute": series,
        "hp_split": series,
        "engines_agree": True,
    }
    with open(os.path.join(directory, "hilbert_LriJ_2_2_0_N20.json"), "w") as f:
        f.write(json.dumps(dump, indent=2) + "\n")


if __name__ == "__main__":
    if len(sys.argv) == 3 and sys.argv[1] == "fixtures":
        write_fixtures(sys.argv[2])
        sys.exit(0)
    sys.exit(main())

#!/usr/bin/env python3
"""Generate the bundled character-table fixtures (data/*.json).

Tables are computed from scratch: conjugacy classes and power maps by direct
group arithmetic, ordinary characters by Dixon's modular algorithm (exact
lift to sums of roots of unity), and the defining-characteristic Brauer
block of PSL(2,19) from eigenvalues of symmetric powers of the natural
module.  Orthogonality is re-verified numerically here and exactly by the
library's validator.

Usage: python3 tools/gen_tables.py [outdir]
"""

import json
import math
import os
import random
import sys
from fractions import Fraction
from math import gcd

import numpy as np
import sympy


# ---------------------------------------------------------------------------
# generic finite group machinery (elements are hashable opaque values)
# ---------------------------------------------------------------------------

class Group:
    def __init__(self, elements, mult, identity):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.n = len(self.elements)
        self.identity = self.index[identity]
        # multiplication table
        self.table = np.zeros((self.n, self.n), dtype=np.int32)
        for i, a in enumerate(self.elements):
            row = [self.index[mult(a, b)] for b in self.elements]
            self.table[i, :] = row
        self.inv = np.zeros(self.n, dtype=np.int32)
        for i in range(self.n):
            self.inv[i] = int(np.where(self.table[i] == self.identity)[0][0])
        self.orders = [self._order(i) for i in range(self.n)]
        self.exponent = 1
        for o in self.orders:
            self.exponent = self.exponent * o // gcd(self.exponent, o)
        self._classes()

    def _order(self, i):
        o, x = 1, i
        while x != self.identity:
            x = int(self.table[x, i])
            o += 1
        return o

    def _classes(self):
        seen = np.zeros(self.n, dtype=bool)
        classes = []
        for i in range(self.n):
            if seen[i]:
                continue
            orbit = set()
            for g in range(self.n):
                orbit.add(int(self.table[int(self.table[g, i]), int(self.inv[g])]))
            for x in orbit:
                seen[x] = True
            classes.append(sorted(orbit))
        # identity first, then ascending element order, then class size
        classes.sort(key=lambda c: (self.orders[c[0]], len(c), c[0]))
        self.classes = classes
        self.class_of = np.zeros(self.n, dtype=np.int32)
        for ci, c in enumerate(classes):
            for x in c:
                self.class_of[x] = ci
        self.reps = [c[0] for c in classes]

    def power(self, i, k):
        r, x = self.identity, i
        k %= self.orders[i]
        while k:
            if k & 1:
                r = int(self.table[r, x])
            x = int(self.table[x, x])
            k >>= 1
        return r

    def power_map(self, k):
        return [int(self.class_of[self.power(rep, k)]) for rep in self.reps]


def closure(gens, mult, identity):
    elems = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = mult(a, g)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    return elems


# ---------------------------------------------------------------------------
# Dixon's algorithm
# ---------------------------------------------------------------------------

def class_matrices(G):
    r = len(G.classes)
    sizes = [len(c) for c in G.classes]
    a = np.zeros((r, r, r), dtype=np.int64)
    for i in range(r):
        Ci = np.array(G.classes[i], dtype=np.int32)
        for j in range(r):
            Cj = np.array(G.classes[j], dtype=np.int32)
            counts = np.zeros(r, dtype=np.int64)
            for x in Ci:
                prods = G.table[x, Cj]
                counts += np.bincount(G.class_of[prods], minlength=r)
            for k in range(r):
                assert counts[k] % sizes[k] == 0
                a[i, j, k] = counts[k] // sizes[k]
    return a


def det_mod(mat, p):
    m = [row[:] for row in mat]
    n = len(m)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        inv = pow(m[col][col], p - 2, p)
        det = det * m[col][col] % p
        for r in range(col + 1, n):
            f = m[r][col] * inv % p
            if f:
                m[r] = [(m[r][c] - f * m[col][c]) % p for c in range(n)]
    return det % p


def nullspace_mod(mat, p):
    m = [[x % p for x in row] for row in mat]
    n = len(m)
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if m[r][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], p - 2, p)
        m[row] = [x * inv % p for x in m[row]]
        for r in range(n):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [(m[r][c] - f * m[row][c]) % p for c in range(n)]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = (-m[ri][fc]) % p
        basis.append(v)
    return basis


def char_table_mod_p(G, a):
    """Common eigenvectors of the class matrices over F_p; returns (p, z, omegas)."""
    r = len(G.classes)
    e = G.exponent
    p = e + 1
    # p must exceed 2*sqrt(|G|) for the unique lift, and be much larger than
    # the class count so a random combination separates all eigenvalues
    while not (sympy.isprime(p) and p > 2 * math.isqrt(G.n) + 2 and p > 30 * r * r):
        p += e
    z = pow(sympy.primitive_root(p), (p - 1) // e, p)
    rng = random.Random(12345)
    for _ in range(100):
        coef = [rng.randrange(p) for _ in range(r)]
        M = [[sum(coef[i] * int(a[i, j, k]) for i in range(r)) % p
              for k in range(r)] for j in range(r)]
        # characteristic polynomial by interpolation of det(M - x I)
        xs = list(range(r + 1))
        ys = []
        for x in xs:
            mm = [row[:] for row in M]
            for d in range(r):
                mm[d][d] = (mm[d][d] - x) % p
            ys.append(det_mod(mm, p))
        poly = [0] * (r + 1)
        for xi, yi in zip(xs, ys):
            basis = [1]
            den = 1
            for xj in xs:
                if xj == xi:
                    continue
                basis = polymul_mod(basis, [(-xj) % p, 1], p)
                den = den * (xi - xj) % p
            f = yi * pow(den, p - 2, p) % p
            for d, c in enumerate(basis):
                poly[d] = (poly[d] + f * c) % p
        roots = [x for x in range(p) if polyeval_mod(poly, x, p) == 0]
        if len(roots) != r:
            continue
        omegas = []
        ok = True
        for lam in roots:
            mm = [row[:] for row in M]
            for d in range(r):
                mm[d][d] = (mm[d][d] - lam) % p
            ns = nullspace_mod(mm, p)
            if len(ns) != 1:
                ok = False
                break
            v = ns[0]
            idc = 0  # identity class index
            if v[idc] == 0:
                ok = False
                break
            inv = pow(v[idc], p - 2, p)
            omegas.append([x * inv % p for x in v])
        if ok:
            return p, z, omegas
    raise RuntimeError("class matrix splitting failed")


def polymul_mod(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def polyeval_mod(poly, x, p):
    acc = 0
    for c in reversed(poly):
        acc = (acc * x + c) % p
    return acc


def dixon(G):
    """Exact ordinary character table: list of rows, each row a list (one per
    class) of (conductor m, {exponent: multiplicity}) with value sum_j c_j zeta_m^j."""
    a = class_matrices(G)
    r = len(G.classes)
    sizes = [len(c) for c in G.classes]
    p, z, omegas = char_table_mod_p(G, a)
    inv_class = [int(G.class_of[G.inv[rep]]) for rep in G.reps]
    chars = []
    for w in omegas:
        s = sum(w[i] * w[inv_class[i]] * pow(sizes[i], p - 2, p) for i in range(r)) % p
        deg_sq = G.n * pow(s, p - 2, p) % p
        deg = next(d for d in range(1, math.isqrt(G.n) + 1) if d * d % p == deg_sq)
        row_mod = [deg * w[i] % p * pow(sizes[i], p - 2, p) % p for i in range(r)]
        chars.append((deg, row_mod))
    assert sum(d * d for d, _ in chars) == G.n
    # lift each value to an exact sum of roots of unity
    table = []
    for deg, row_mod in chars:
        row = []
        for ci, rep in enumerate(G.reps):
            m = G.orders[rep]
            mults = {}
            minv = pow(m, p - 2, p)
            zm = pow(z, G.exponent // m, p)
            for j in range(m):
                acc = 0
                for l in range(m):
                    cl = int(G.class_of[G.power(rep, l)])
                    acc = (acc + row_mod[cl] * pow(zm, (-j * l) % m, p)) % p
                mj = acc * minv % p
                assert mj <= deg, "lift out of range"
                if mj:
                    mults[j] = mj
            row.append((m, mults))
        table.append(row)
    table.sort(key=lambda row: (row[0][1].get(0, 0), [sorted(v[1].items()) for v in row]))
    verify_numeric(G, table)
    return table


def value_complex(val):
    m, mults = val
    return sum(c * complex(math.cos(2 * math.pi * j / m), math.sin(2 * math.pi * j / m))
               for j, c in mults.items())


def verify_numeric(G, table):
    r = len(G.classes)
    sizes = [len(c) for c in G.classes]
    vals = [[value_complex(v) for v in row] for row in table]
    for i in range(r):
        for j in range(r):
            s = sum(sizes[k] * vals[i][k] * vals[j][k].conjugate() for k in range(r))
            want = G.n if i == j else 0.0
            assert abs(s - want) < 1e-6 * G.n, (i, j, s)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def cyc_json(val):
    m, mults = val
    if not mults:
        return 0
    if set(mults) == {0}:
        return mults[0]
    return {"conductor": m, "terms": [[j, c, 1] for j, c in sorted(mults.items())]}


def class_names(G):
    names = []
    count = {}
    for rep in G.reps:
        o = G.orders[rep]
        letter = count.get(o, 0)
        count[o] = letter + 1
        suffix = ""
        n = letter
        while True:
            suffix = chr(ord('a') + n % 26) + suffix
            n = n // 26 - 1
            if n < 0:
                break
        names.append(f"{o}{suffix}")
    return names


def table_json(name, G, table, names=None, brauer=None, pap_assumed=None):
    names = names or class_names(G)
    doc = {
        "name": name,
        "order": G.n,
        "exponent": G.exponent,
        "classes": [
            {"name": names[ci], "element_order": G.orders[rep], "size": len(G.classes[ci])}
            for ci, rep in enumerate(G.reps)
        ],
        # prime maps up to the largest element order, so composite class
        # powers can always be routed through prime maps
        "power_maps": {
            str(p): G.power_map(p)
            for p in sympy.primerange(2, max(G.orders[r] for r in G.reps) + 1)
        },
        "characters": [[cyc_json(v) for v in row] for row in table],
    }
    if brauer is not None:
        doc["brauer"] = brauer
    if pap_assumed is not None:
        doc["pap_assumed"] = pap_assumed
    return doc


# ---------------------------------------------------------------------------
# concrete groups
# ---------------------------------------------------------------------------

def cyclic_product(factors):
    def mult(x, y):
        return tuple((a + b) % f for a, b, f in zip(x, y, factors))

    import itertools
    elems = list(itertools.product(*[range(f) for f in factors]))
    return Group(elems, mult, tuple(0 for _ in factors))


def alternating5():
    base = tuple(range(5))

    def mult(a, b):  # apply b then a
        return tuple(a[b[i]] for i in range(5))

    g1 = (1, 2, 3, 4, 0)
    g2 = (1, 2, 0, 3, 4)
    return Group(closure([g1, g2], mult, base), mult, base)


def dihedral8():
    base = tuple(range(4))

    def mult(a, b):
        return tuple(a[b[i]] for i in range(4))

    rot = (1, 2, 3, 0)
    flip = (3, 2, 1, 0)
    return Group(closure([rot, flip], mult, base), mult, base)


def frobenius21():
    def mult(x, y):
        a, b = x
        c, d = y
        return ((a + c * pow(2, b, 7)) % 7, (b + d) % 3)

    elems = [(a, b) for a in range(7) for b in range(3)]
    return Group(elems, mult, (0, 0))


def group216():
    """The Hessian group of order 216: (C3 x C3) : SL(2,3), with SL(2,3)
    acting on C3 x C3 as its natural module over F_3."""
    def matmul(u, v):
        return tuple(tuple(sum(u[i][k] * v[k][j] for k in range(2)) % 3
                           for j in range(2)) for i in range(2))

    ident = ((1, 0), (0, 1))
    sl23 = sorted(closure([((0, 2), (1, 0)), ((1, 1), (0, 1))], matmul, ident))
    assert len(sl23) == 24

    def mult(x, y):
        v1, m1 = x
        v2, m2 = y
        w = tuple(sum(m1[i][j] * v2[j] for j in range(2)) % 3 for i in range(2))
        return (tuple((a + b) % 3 for a, b in zip(v1, w)), matmul(m1, m2))

    elems = [((a, b), m) for a in range(3) for b in range(3) for m in sl23]
    return Group(elems, mult, ((0, 0), ident))


def psl2(q):
    """PSL(2,q) as SL(2,q) matrices modulo sign, q odd prime."""
    def norm(m):
        for x in m:
            if x:
                if x > q // 2:
                    return tuple((-y) % q for y in m)
                return m
        raise AssertionError

    def mult(u, v):
        a, b, c, d = u
        e, f, g, h = v
        return norm(((a * e + b * g) % q, (a * f + b * h) % q,
                     (c * e + d * g) % q, (c * f + d * h) % q))

    g1 = norm((1, 1, 0, 1))
    g2 = norm((0, 1, q - 1, 0))
    return Group(closure([g1, g2], mult, (1, 0, 0, 1)), mult, (1, 0, 0, 1))


# ---------------------------------------------------------------------------
# Brauer block of PSL(2,q) in defining characteristic
# ---------------------------------------------------------------------------

def brauer_psl2_defining(G, q):
    """Brauer characters of the simple modules Sym^{2k}(natural), k=0..(q-1)/2,
    on q-regular classes, via eigenvalue lifting through a generator of F_{q^2}^*."""
    # arithmetic in F_{q^2} = F_q[x]/(x^2 - nr) with nr a non-residue
    nr = next(n for n in range(2, q) if pow(n, (q - 1) // 2, q) == q - 1)

    def fmul(u, v):
        a, b = u
        c, d = v
        return ((a * c + b * d % q * nr) % q, (a * d + b * c) % q)

    def fpow(u, k):
        r = (1, 0)
        while k:
            if k & 1:
                r = fmul(r, u)
            u = fmul(u, u)
            k >>= 1
        return r

    qq = q * q - 1
    w = None
    for a in range(1, q):
        for b in range(1, q):
            cand = (a, b)
            if all(fpow(cand, qq // f) != (1, 0) for f in sympy.primefactors(qq)):
                w = cand
                break
        if w:
            break
    dlog = {}
    acc = (1, 0)
    for i in range(qq):
        dlog[acc] = i
        acc = fmul(acc, w)

    regular = [ci for ci, rep in enumerate(G.reps) if G.orders[rep] % q != 0]
    rows = []
    for wt in range(0, q, 2):  # highest weights 0,2,...,q-1 -> dims 1,3,...,q
        row = []
        for ci in regular:
            rep = G.elements[G.reps[ci]]
            a, b, c, d = rep
            tr = (a + d) % q
            # eigenvalue lam of the SL(2,q) preimage: lam^2 - tr*lam + 1 = 0 in F_{q^2}
            lam = next(u for u in dlog
                       if (fmul(u, u)[0] - tr * u[0] + 1) % q == 0
                       and (fmul(u, u)[1] - tr * u[1]) % q == 0)
            e = dlog[lam]
            # value = sum_{j=0..wt} lift(lam^{wt-2j}) ; exponents even
            mults = {}
            for j in range(0, wt + 1):
                expo = (e * (wt - 2 * j)) % qq
                mults[expo] = mults.get(expo, 0) + 1
            g = qq
            for expo in mults:
                g = gcd(g, expo)
            g = g or qq
            cond = qq // g
            red = {}
            for expo, c in mults.items():
                red[expo // g] = c
            row.append((cond, red))
        rows.append(row)
    return regular, rows


# ---------------------------------------------------------------------------
# fixture-specific class naming for the order-216 group
# ---------------------------------------------------------------------------

def abelianization_labels(G):
    """Label each element by its coset of the derived subgroup."""
    n = G.n
    inv = [0] * n
    for i in range(n):
        for j in range(n):
            if G.table[i][j] == G.identity:
                inv[i] = j
                break
    gens = {int(G.table[G.table[i][j]][G.table[inv[i]][inv[j]]])
            for i in range(n) for j in range(n)}
    der = {G.identity}
    frontier = [G.identity]
    genl = list(gens)
    while frontier:
        nxt = []
        for e in frontier:
            for g in genl:
                f = int(G.table[e][g])
                if f not in der:
                    der.add(f)
                    nxt.append(f)
        frontier = nxt
    labels = {}
    cosets = {}
    for e in range(n):
        if e in labels:
            continue
        coset = frozenset(int(G.table[e][d]) for d in der)
        key = min(coset)
        if key not in cosets:
            cosets[key] = len(cosets)
        for y in coset:
            labels[y] = cosets[key]
    return labels


def name_g216(G):
    """Names via order+letter, with the order-3/6 letters pinned so that
    3a^2 = 6a^2 = 3c and 3d^2 = 3e, and 3b is the real order-3 class."""
    names = class_names(G)
    sq = G.power_map(2)
    order3 = [ci for ci, rep in enumerate(G.reps) if G.orders[rep] == 3]
    order6 = [ci for ci, rep in enumerate(G.reps) if G.orders[rep] == 6]
    fixed = [ci for ci in order3 if sq[ci] == ci]
    moved = [ci for ci in order3 if sq[ci] != ci]
    assert len(fixed) == 1 and len(moved) == 4 and len(order6) == 2
    # the (3a, 3c) pair is the one the order-6 classes square into
    six_targets = {sq[ci] for ci in order6}
    assert len(six_targets) == 2
    pair_ac = [ci for ci in moved if ci in six_targets]
    pair_de = [ci for ci in moved if ci not in six_targets]
    assert len(pair_ac) == 2 and len(pair_de) == 2
    c, a = pair_ac  # 3a squares to 3c
    assert sq[a] == c and sq[c] == a
    # orient the (3d, 3e) pair so that 3d lies over the same coset of the
    # derived subgroup as 3a (the linear characters agree on 3a and 3d)
    psi = abelianization_labels(G)
    d, e_ = sorted(pair_de, key=lambda ci: 0 if psi[G.reps[ci]] == psi[G.reps[a]] else 1)
    assert psi[G.reps[d]] == psi[G.reps[a]]
    assert sq[d] == e_ and sq[e_] == d
    names[a], names[fixed[0]], names[c], names[d], names[e_] = \
        "3a", "3b", "3c", "3d", "3e"
    # 6a must square to 3c
    sixes = sorted(order6, key=lambda ci: 0 if sq[ci] == c else 1)
    for i, ci in enumerate(sixes):
        names[ci] = "6" + chr(ord('a') + i)
    assert sq[sixes[0]] == c
    return names


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")
    os.makedirs(outdir, exist_ok=True)

    def emit(fname, doc):
        with open(os.path.join(outdir, fname), "w") as f:
            json.dump(doc, f, indent=1)
            f.write("\n")
        print("wrote", fname)

    for n in (3, 6):
        G = cyclic_product([n])
        emit(f"c{n}.json", table_json(f"C{n}", G, dixon(G)))

    G = dihedral8()
    emit("d8.json", table_json("D8", G, dixon(G), pap_assumed=True))

    G = frobenius21()
    emit("frobenius21.json", table_json("F21", G, dixon(G), pap_assumed=True))

    G = alternating5()
    emit("a5.json", table_json("A5", G, dixon(G)))

    G = group216()
    emit("g216_153.json", table_json("G216", G, dixon(G), names=name_g216(G)))

    q = 19
    G = psl2(q)
    print("PSL(2,19): order", G.n, "classes", len(G.classes),
          "orders", [G.orders[r] for r in G.reps])
    table = dixon(G)
    regular, rows = brauer_psl2_defining(G, q)
    # cross-check: the Steinberg character restricted to q-regular classes
    # equals the Brauer character of the q-dimensional simple module
    st = next(row for row in table if row[0][1].get(0) == q)
    phi_q = next(row for row in rows if sum(row[0][1].values()) == q)
    for pos, ci in enumerate(regular):
        assert abs(value_complex(st[ci]) - value_complex(phi_q[pos])) < 1e-6
    triv = next(row for row in table if row[0][1].get(0) == 1 and len(row[0][1]) == 1)
    assert all(value_complex(v) == 1 for v in triv)
    brauer = {str(q): {
        "regular_classes": regular,
        "characters": [[cyc_json(v) for v in row] for row in rows],
    }}
    emit("psl2_19.json", table_json("PSL(2,19)", G, table, brauer=brauer))


if __name__ == "__main__":
    main()

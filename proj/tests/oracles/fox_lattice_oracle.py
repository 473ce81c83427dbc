"""Independent oracle for Fox-calculus fiber lattices and Smith forms.

Uses plain tuples for permutations and sympy for integer linear algebra.
Values printed here are frozen into the C++ tests.
"""
import itertools
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ


def compose(p, q):  # (pq)(x) = p(q(x))
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p):
    r = [0] * len(p)
    for i, v in enumerate(p):
        r[v] = i
    return tuple(r)


def closure(gens):
    e = tuple(range(len(gens[0])))
    seen = [e]
    frontier = [e]
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                v = compose(u, g)
                if v not in seen:
                    seen.append(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def fox(word, images, r, elems):
    """word: list of (gen, exp). Returns dict (i, q) -> coeff."""
    e = tuple(range(len(images[0])))
    prefix = e
    out = {}
    for g, s in word:
        if s == 1:
            key = (g, prefix)
            out[key] = out.get(key, 0) + 1
            prefix = compose(prefix, images[g])
        else:
            prefix = compose(prefix, inverse(images[g]))
            key = (g, prefix)
            out[key] = out.get(key, 0) - 1
    return prefix, {k: v for k, v in out.items() if v}


def schreier(images, r):
    e = tuple(range(len(images[0])))
    reps = {e: []}
    order = [e]
    i = 0
    while i < len(order):
        u = order[i]
        for j in range(r):
            v = compose(u, images[j])
            if v not in reps:
                reps[v] = reps[u] + [(j, 1)]
                order.append(v)
        i += 1
    gens = []
    for u in order:
        for j in range(r):
            v = compose(u, images[j])
            w = reps[u] + [(j, 1)] + [(g, -s) for g, s in reversed(reps[v])]
            # free reduction
            red = []
            for x in w:
                if red and red[-1][0] == x[0] and red[-1][1] == -x[1]:
                    red.pop()
                else:
                    red.append(x)
            if red:
                gens.append(red)
    return order, gens


def lattice(images, r):
    order, gens = schreier(images, r)
    idx = {q: k for k, q in enumerate(order)}
    rows = []
    for w in gens:
        q, d = fox(w, images, r, order)
        assert q == order[0]
        row = [0] * (len(order) * r)
        for (g, qq), c in d.items():
            row[g * len(order) + idx[qq]] = c
        rows.append(row)
    return order, gens, Matrix(rows)


s2 = (1, 0)
s3_t = (1, 0, 2)
s3_c = (1, 2, 0)
cases = {
    "r=2,Z2": ([s2, s2], 2),
    "r=2,S3": ([s3_t, s3_c], 2),
    "r=3,Z2": ([s2, s2, s2], 3),
}
for name, (imgs, r) in cases.items():
    order, gens, M = lattice(imgs, r)
    print(name, "|Q|=", len(order), "schreier=", len(gens), "rank=", M.rank())

# magnus image of [x,y] over Z/2
q, d = fox([(0, 1), (1, 1), (0, -1), (1, -1)], [s2, s2], 2, None)
print("[x,y] fox:", q, sorted(d.items()))

print("snf [[2,4],[6,8]]:", smith_normal_form(Matrix([[2, 4], [6, 8]]), domain=ZZ))
print("snf -I4:", smith_normal_form(-Matrix.eye(4), domain=ZZ))

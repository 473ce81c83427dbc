"""Independent oracle for lamp(Z) and wr(Z, Z) products.

lamp(Z) elements are (left value, dense window of values, shift) with
(f ; m)(g ; k) = (f + g(. + m) ; m + k). Output uses the step-function
notation "([v0 | c1 | v1 | ... | 0] ; m)" where v_i holds on (c_i, c_{i+1}].
wr(Z, Z) elements are (finitely supported dict, b) with
(f, b)(f', b') = (f + f'(. - b), b + b').
Values printed here are frozen into the C++ tests.
"""

LO, HI = -60, 60


class Lamp:
    def __init__(self, left, window, shift):
        self.left, self.window, self.shift = left, window, shift

    def at(self, n):
        if n < LO:
            return self.left
        if n > HI:
            return 0
        return self.window[n - LO]

    def __mul__(self, o):
        vals = [self.at(n) + o.at(n + self.shift) for n in range(LO, HI + 1)]
        return Lamp(self.left + o.left, vals, self.shift + o.shift)

    def inv(self):
        vals = [-self.at(n - self.shift) for n in range(LO, HI + 1)]
        return Lamp(-self.left, vals, -self.shift)

    def __pow__(self, k):
        r = ident()
        base = self if k >= 0 else self.inv()
        for _ in range(abs(k)):
            r = r * base
        return r

    def fmt(self):
        parts = [str(self.left)]
        cur = self.left
        for n in range(LO, HI + 1):
            v = self.at(n)
            if v != cur:
                parts += [str(n - 1), str(v)]
                cur = v
        assert cur == 0
        if len(parts) == 1:
            return "(%s ; %d)" % ("[0]", self.shift)
        return "([%s] ; %d)" % (" | ".join(parts), self.shift)


def ident():
    return Lamp(0, [0] * (HI - LO + 1), 0)


def sigma():
    return Lamp(0, [0] * (HI - LO + 1), 1)


def fg(g):
    return Lamp(g, [g if n <= 0 else 0 for n in range(LO, HI + 1)], 0)


def delta(g):
    return Lamp(0, [g if n == 0 else 0 for n in range(LO, HI + 1)], 0)


def comm(a, b):
    return a * b * a.inv() * b.inv()


s = sigma()
cases = {
    "fg(5)*sigma^2*fg(-3)": fg(5) * s ** 2 * fg(-3),
    "(fg(2)*sigma)^3": (fg(2) * s) ** 3,
    "sigma^-1*fg(4)*sigma*fg(1)": s.inv() * fg(4) * s * fg(1),
    "[fg(5), sigma]": comm(fg(5), s),
    "[fg(2)*sigma, fg(3)]": comm(fg(2) * s, fg(3)),
    "[delta(7), sigma^3]": comm(delta(7), s ** 3),
    "fg(1)*sigma^-2*fg(1)*sigma^5": fg(1) * s ** -2 * fg(1) * s ** 5,
}
for k, v in cases.items():
    print("lamp(Z)", k, "=", v.fmt(), "| delta(5)" if v.fmt() == delta(5).fmt() else "")


def wr_mul(a, b):
    f, x = a
    g, y = b
    h = dict(f)
    for p, v in g.items():
        h[p + x] = h.get(p + x, 0) + v
    return ({p: v for p, v in h.items() if v}, x + y)


def wr_inv(a):
    f, x = a
    return ({p - x: -v for p, v in f.items()}, -x)


def wr_fmt(a):
    f, x = a
    parts = ["base(%d)" % v if p == 0 else "base(%d, %d)" % (v, p) for p, v in sorted(f.items())]
    if x:
        parts.append("top(%d)" % x)
    return " ".join(parts) or "1"


base = lambda v, p=0: ({p: v}, 0)
top = lambda b: ({}, b)
e = wr_mul(wr_mul(base(2), top(1)), base(3))
print("wr(Z,Z) base(2)*top(1)*base(3) =", wr_fmt(e))
c = wr_mul(wr_mul(top(2), base(5)), wr_mul(wr_inv(top(2)), wr_inv(base(5))))
print("wr(Z,Z) [top(2), base(5)] =", wr_fmt(c))

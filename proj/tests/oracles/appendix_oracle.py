"""Independent check of the A, C, alpha identities and the mirror map with Fractions."""
from fractions import Fraction as F
from math import factorial

D = 14


def mul(a, b):
    n = min(len(a), len(b))
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


def inv(a):
    r = [F(0)] * len(a)
    r[0] = 1 / F(a[0])
    for k in range(1, len(a)):
        r[k] = -sum(a[i] * r[k - i] for i in range(1, k + 1)) / a[0]
    return r


def sig(k, n):
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def theta(a):
    return [i * a[i] for i in range(len(a))]


def sub3(a):
    r = [F(0)] * (D + 1)
    for i in range(D + 1):
        if 3 * i <= D:
            r[3 * i] = a[i]
    return r


def euler(step):
    r = [F(1)] + [F(0)] * D
    for n in range(1, D + 1):
        if n * step <= D:
            f = [F(0)] * (D + 1)
            f[0] = 1
            f[n * step] = -1
            r = mul(r, f)
    return r


def pw(a, k):
    r = [F(1)] + [F(0)] * D
    for _ in range(k):
        r = mul(r, a)
    return r


def one_minus(a):
    return [(1 if i == 0 else 0) - x for i, x in enumerate(a)]


E2 = [F(1)] + [-24 * sig(1, n) for n in range(1, D + 1)]
A = [F(0)] * (D + 1)
for m in range(-10, 11):
    for n in range(-10, 11):
        e = m * m + m * n + n * n
        if e <= D:
            A[e] += 1
C3 = [F(0)] + [27 * c for c in mul(pw(euler(3), 9), inv(pw(euler(1), 3)))][:D]
A3 = pw(A, 3)
al = mul(C3, inv(A3))
E2_3 = sub3(E2)
A2 = mul(A, A)
thlogA = mul(theta(A), inv(A))
print("A", [str(x) for x in A[:8]])
print("alpha", [str(x) for x in al[:8]])
print("(i)", A2 == [(3 * x - y) / 2 for x, y in zip(E2_3, E2)])
print("(ii)", theta(al) == mul(mul(al, one_minus(al)), A2))
print("(iii)", E2 == [12 * x - y for x, y in zip(thlogA, mul([4 * x - (1 if i == 0 else 0) for i, x in enumerate(al)], A2))])
E = [(3 * x + y) / 4 for x, y in zip(E2_3, E2)]
print("(iv)", E == [6 * x - y for x, y in zip(thlogA, mul([2 * c - a for c, a in zip(C3, A3)], inv(A)))])
u = al[1:]
thlogal = [F(1)] + [F(0)] * (D - 1)
thlogal = [a + b for a, b in zip(thlogal, mul(theta(u), inv(u)))]
thlog1m = mul(theta(one_minus(al)), inv(one_minus(al)))[:D]
v = [-x / 2 - (3 * a + b) / 24 for x, a, b in zip(thlogA[:D], thlogal, thlog1m)]
print("(v)", v == [-x / 8 for x in E2_3[:D]])

I0 = [F(factorial(3 * d), factorial(d) ** 3) for d in range(D + 1)]
I1 = [F(factorial(3 * d), factorial(d) ** 3) * 3 * sum(F(1, k) for k in range(d + 1, 3 * d + 1)) for d in range(D + 1)]
g = mul(I1, inv(I0))
ex = [F(1)] + [F(0)] * D
for n in range(1, D + 1):
    ex[n] = sum(k * g[k] * ex[n - k] for k in range(1, n + 1)) / n
qx = [F(0)] + ex[:D]


def comp(f, h):
    r = [F(0)] * (D + 1)
    p = [F(1)] + [F(0)] * D
    for i in range(D + 1):
        r = [a + f[i] * b for a, b in zip(r, p)]
        p = mul(p, h)
    return r


xq = [F(0), F(1)] + [F(0)] * (D - 1)
for n in range(2, D + 1):
    xq[n] -= comp(qx, xq)[n]
print("q(x)", [str(x) for x in qx[:6]])
print("27 x(q) == alpha", [27 * c for c in xq] == al)

#!/usr/bin/env python3
"""Regenerates the frozen reference values used by the C++ unit tests.

Every value comes from 40-digit mpmath quadrature / root finding on the
defining integrals, sharing no code with the library.
"""
import mpmath as mp

mp.mp.dps = 40


def arcsin(p, q, x):
    return mp.quad(lambda t: (1 - t**q) ** (-1 / mp.mpf(p)), [0, x])


def arsinh(p, q, x):
    return mp.quad(lambda t: (1 + t**q) ** (-1 / mp.mpf(p)), [0, x])


def half_pi(p, q):
    return mp.quad(lambda t: (1 - t**q) ** (-1 / mp.mpf(p)), [0, 1])


def bisect(g, lo, hi, iters=200):
    for _ in range(iters):
        mid = (lo + hi) / 2
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def sin_pq(p, q, x):
    return bisect(lambda y: arcsin(p, q, y) - x, mp.mpf(0), mp.mpf(1), 140)


def sinh_pq(p, q, x):
    return bisect(lambda y: arsinh(p, q, y) - x, mp.mpf(0), mp.mpf(10), 140)


def arctan_pq(p, q, y):
    # tan = s / c with s^q + c^p = 1
    s = bisect(lambda s: s**q + (s / y) ** p - 1, mp.mpf(0), mp.mpf(1), 140)
    return arcsin(p, q, s)


def half_pi_minus_arccos(p, q, x):
    p, q = mp.mpf(p), mp.mpf(q)
    return p / q * mp.quad(lambda u: (1 - u**p) ** (1 / q - 1) * u ** (p - 2), [0, x])


def power_mean(a, x, y):
    if a == 0:
        return mp.sqrt(x * y)
    a = mp.mpf(a)
    return ((x**a + y**a) / 2) ** (1 / a)


def pair(f, p, q, a, b, r, s):
    lhs = f(p, q, power_mean(a, r, s))
    rhs = power_mean(b, f(p, q, r), f(p, q, s))
    return lhs, rhs


def show(name, v):
    print(f"{name:28s} {mp.nstr(v, 20)}")


if __name__ == "__main__":
    show("arcsin_pq(4,3,0.5)", arcsin(4, 3, mp.mpf("0.5")))
    show("half_pi(4,4)", half_pi(4, 4))
    show("pi/(4 sin(pi/4))", mp.pi / (4 * mp.sin(mp.pi / 4)))
    show("half_pi(3,5)", half_pi(3, 5))
    show("half_pi(4,3)", half_pi(4, 3))
    show("arsinh_pq(3,5,2)", arsinh(3, 5, 2))
    show("sin_pq(4,3,1.0)", sin_pq(4, 3, 1))
    show("cos_pq(4,3,0.9)", (1 - sin_pq(4, 3, mp.mpf("0.9")) ** 3) ** (mp.mpf(1) / 4))
    show("arctan_pq(4,3,0.7)", arctan_pq(4, 3, mp.mpf("0.7")))
    show("sinh_pq(3,5,0.8)", sinh_pq(3, 5, mp.mpf("0.8")))
    show("arsinh_pq(2,2,50)", arsinh(2, 2, 50))
    show("arsinh_pq(1.2,5,50)", arsinh(mp.mpf("1.2"), 5, 50))
    show("arsinh_pq(3,1.5,50)", arsinh(3, mp.mpf("1.5"), 50))
    # (1,-5)-convexity witness for arcsin_{3,4}: M_1 on the left, M_-5 on the right
    r, s = mp.mpf("0.1"), mp.mpf("0.9")
    lhs = arcsin(3, 4, (r + s) / 2)
    fr, fs = arcsin(3, 4, r), arcsin(3, 4, s)
    rhs = ((fr**-5 + fs**-5) / 2) ** (mp.mpf(-1) / 5)
    show("witness(0.1,0.9) lhs", lhs)
    show("witness(0.1,0.9) rhs", rhs)

    show("2F1(1/2,1/2;3/2;1/4)", mp.hyp2f1(0.5, 0.5, 1.5, 0.25))
    show("2F1(1/3,1/4;5/4;-0.9)", mp.hyp2f1(mp.mpf(1) / 3, mp.mpf(1) / 4, mp.mpf(5) / 4, mp.mpf("-0.9")))
    show("2F1(1,1/3;6/5;0.75)", mp.hyp2f1(1, mp.mpf(1) / 3, mp.mpf(6) / 5, mp.mpf("0.75")))
    show("2F1(-3,2;1/2;0.3)", mp.hyp2f1(-3, 2, mp.mpf("0.5"), mp.mpf("0.3")))
    # convexity counterexamples inside the stated parameter regions
    cases = [
        ("arcsin(2,2) a=0 b=-2", arcsin, 2, 2, 0, -2, "0.2", "0.999"),
        ("arcsin(3,1.5) a=-2 b=-2", arcsin, 3, mp.mpf("1.5"), -2, -2, "0.25", "0.75"),
        ("pi/2-arccos(2,2) a=-0.5 b=-1", half_pi_minus_arccos, 2, 2, mp.mpf("-0.5"), -1, "0.1", "0.999"),
        ("pi/2-arccos(2,4) a=-0.5 b=-1", half_pi_minus_arccos, 2, 4, mp.mpf("-0.5"), -1, "0.1", "0.95"),
    ]
    for name, f, p, q, a, b, r, s in cases:
        lhs, rhs = pair(f, p, q, a, b, mp.mpf(r), mp.mpf(s))
        show(name + " lhs", lhs)
        show(name + " rhs", rhs)

"""Regenerates oracle_values.hpp from 40-digit mpmath evaluations.

Every quantity is computed from its defining sum or product, independent of
the recurrences used by the library.
"""
from mpmath import mp, mpf, mpc, sqrt, exp, pi, acos, conj, arg, factorial, laguerre, hermite, quad, cos

mp.dps = 40


def poch(a, q, n):
    p = mpc(1)
    for k in range(n):
        p *= 1 - a * q**k
    return p


def pinf(a, q):
    p, k = mpc(1), 0
    while abs(a * q**k) > mpf(10) ** -45:
        p *= 1 - a * q**k
        k += 1
    return p


def qbin(n, k, q):
    return poch(q, q, n) / (poch(q, q, n - k) * poch(q, q, k))


def cq_hermite(n, x, q):
    th = acos(x)
    return sum(qbin(n, k, q) * exp(1j * (n - 2 * k) * th) for k in range(n + 1)).real


def wall(n, x, a, q):
    return sum(poch(q**-n, q, k) / (poch(a * q, q, k) * poch(q, q, k)) * (q * x) ** k
               for k in range(n + 1))


def phi32(m, b, c, d, e, q, t):
    return sum(poch(q**-m, q, k) * poch(b, q, k) * poch(c, q, k)
               / (poch(d, q, k) * poch(e, q, k) * poch(q, q, k)) * t**k for k in range(m + 1))


def asc(m, x, a, b, q):
    th = acos(x)
    return poch(a * b, q, m) / a**m * phi32(m, a * exp(1j * th), a * exp(-1j * th), a * b, 0, q, q)


def omega(u, q):
    p = pinf(q, q) * sqrt(1 - q) / (4 * pi * sqrt(1 - (1 - q) * u * u / 4))
    k = 0
    while q**k > mpf(10) ** -45:
        p *= 1 + (2 - u * u * (1 - q)) * q**k + q ** (2 * k)
        k += 1
    return p.real


def phi(j, xi, q):
    return sqrt(sqrt(2) * omega(sqrt(2) * xi, q) / poch(q, q, j).real) * cq_hermite(j, sqrt((1 - q) / 2) * xi, q)


def coeff(j, m, z, q):
    mn, mx, d = min(m, j), max(m, j), abs(m - j)
    th = arg(z) if z != 0 else 0
    num = (-1) ** mn * poch(q, q, mx) * q ** (mn * (mn - 1) // 2) * sqrt(1 - q) ** d * abs(z) ** d * exp(-1j * (m - j) * th)
    den = poch(q, q, d) * sqrt(q ** (m * j) * poch(q, q, m) * poch(q, q, j))
    return num / den * wall(mn, (1 - q) * abs(z) ** 2, q**d, q)


def normalization(m, x, q):
    return (q**-m * poch(q ** (1 - m) * (1 - q) * x, q, m) / pinf(q**-m * (1 - q) * x, q)).real


def h_classical(j, m, z):
    mn, d = min(m, j), abs(m - j)
    return (-1) ** mn / sqrt(factorial(m) * factorial(j)) * factorial(mn) * abs(z) ** d * exp(-1j * (m - j) * arg(z)) * laguerre(mn, d, abs(z) ** 2)


def hfun(j, x):
    return hermite(j, x) * exp(-x * x / 2) / sqrt(2**j * factorial(j) * sqrt(pi))


def classical_bm(f, m, z):
    pre = (-1) ** m / sqrt(2**m * factorial(m) * sqrt(pi))
    return pre * quad(lambda x: exp(-z * z / 2 - x * x / 2 + sqrt(2) * x * z) * hermite(m, x - (z + conj(z)) / sqrt(2)) * f(x), [-12, 0, 12])


q5 = mpf('0.5')
entries = []


def add(name, value):
    value = mpc(value)
    entries.append((name, value.real, value.imag))


add('kQPochHalfHalf', pinf(q5, q5))
add('kEqHalfAtOne', 1 / pinf(q5, q5))
add('kQPochComplex', pinf(mpc('0.3', '0.4'), mpf('0.7')))
add('kCqHermite5', cq_hermite(5, mpf('0.3'), mpf('0.7')))
add('kWall3', wall(3, mpf('0.4'), mpf('0.3'), q5))
add('kAsc3', asc(3, mpf('0.2'), mpc('0.3', '0.1'), mpf('0.4'), q5))
add('kOmega', omega(mpf('0.7'), q5))
add('kPhi3', phi(3, mpf('0.4'), q5))
add('kCoeff21', coeff(2, 1, mpc('0.3', '0.2'), q5))
add('kCoeff13', coeff(1, 3, mpc('0.2', '-0.1'), mpf('0.8')))
add('kNormalization2', normalization(2, mpf('0.4'), q5))
add('kOverlapSeries1', sum(conj(coeff(j, 1, mpc('0.3'), q5)) * coeff(j, 1, mpc('0.2', '0.1'), q5) for j in range(200)))
add('kKernelSeries2', sum(coeff(j, 2, mpc('0.1', '0.15'), q5) * phi(j, mpf('0.2'), q5) for j in range(150)))
add('kHClassical21', h_classical(2, 1, mpc('0.3', '0.2')))
add('kClassicalBm', classical_bm(lambda x: hfun(2, x), 1, mpc('0.3', '0.2')))
add('kOmegaNearOne', omega(mpf('1.0'), mpf('0.999')))

with open('oracle_values.hpp', 'w') as out:
    out.write('#pragma once\n\n// Generated by make_oracles.py (mpmath, 40 digits).\n\n#include <complex>\n\nnamespace oracle {\n\n')
    for name, re, im in entries:
        out.write('inline const std::complex<double> %s{%s, %s};\n' % (name, mp.nstr(re, 17), mp.nstr(im, 17)))
    out.write('\n}  // namespace oracle\n')

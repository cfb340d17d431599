"""Independent reference values frozen into the C++ tests.

Run with: python3 tests/oracles/oracles.py
Uses scipy/mpmath only; shares no code with the C++ implementation.
"""
import math
import cmath
import numpy as np
from scipy.special import ellipk
from scipy.optimize import least_squares

h = 6.62607015e-34
c = 2.99792458e8
q = 1.602176634e-19
eps0 = 8.8541878128e-12


def density(P, lam, A, eta, alpha, tau, L, vs, R, z, coupling=1.0):
    flux = coupling * P * lam / (h * c)
    K = (alpha * L * L + vs * tau) / (L + vs * tau)
    return eta * alpha * tau * flux / A * (1 - R) / (1 - alpha**2 * L**2) * (
        math.exp(-alpha * z) - K * math.exp(-z / L))


print("photon_flux 1.5W:", repr(1.5 * 915e-9 / (h * c)))
print("photon_flux 175mW:", repr(0.175 * 915e-9 / (h * c)))
A = math.pi * (50e-6) ** 2
print("n(0) anchor:", repr(density(1.5, 915e-9, A, 1.0, 3.3e4, 25e-6, 212e-6, 1.0, 0.3, 0.0)))
print("n(50um) anchor:", repr(density(1.5, 915e-9, A, 1.0, 3.3e4, 25e-6, 212e-6, 1.0, 0.3, 50e-6)))

# Coplanar-strip gap capacitance, default chiplet.
g, w, length = 75e-6, 500e-6, 3.075e-3
s = length / 2 - g / 2
k = g / (g + 2 * s)
kp = math.sqrt(1 - k * k)
# scipy ellipk takes parameter m = k^2
ratio = ellipk(kp**2) / ellipk(k**2)
C = eps0 * (11.7 + 1) / 2 * w * ratio
print("k:", repr(k), "K(k')/K(k):", repr(float(ratio)), "C_off:", repr(float(C)))

# R || C impedance
Rr, Cc, f = 22.5e3, 65e-15, 1e9
Z = Rr / (1 + 1j * 2 * math.pi * f * Rr * Cc)
print("|Z| 22.5k||65fF @1GHz:", abs(Z), "wRC:", 2 * math.pi * f * Rr * Cc)

# Two-point magnitude fit.
Z0 = 50.0
def s21(R, C, f):
    Z = R / (1 + 1j * 2 * math.pi * f * R * C)
    return 2 * Z0 / (2 * Z0 + Z)
targets = {1e9: 10 ** (-27 / 20), 4e9: 10 ** (-17 / 20)}
def res(p):
    R, C = math.exp(p[0]), math.exp(p[1])
    return [abs(s21(R, C, f)) - m for f, m in targets.items()]
sol = least_squares(res, [math.log(3000), math.log(70e-15)], xtol=1e-15, ftol=1e-15, gtol=1e-15)
R2, C2 = math.exp(sol.x[0]), math.exp(sol.x[1])
print("two-point fit R, C:", R2, C2, "residuals", sol.fun)
for f in (1e9, 4e9):
    print("  IL", f, -20 * math.log10(abs(s21(R2, C2, f))))
print("  |Z| @1GHz:", abs(R2 / (1 + 1j * 2 * math.pi * 1e9 * R2 * C2)))

# ON-state inversions
for il in (0.84, 0.72, 0.33):
    print("R(IL=%g) =" % il, 2 * Z0 * (10 ** (il / 20) - 1))

# Microstrip: Wheeler/Hammerstad synthesis (A/B branches), independent of analysis code.
def synth(er, Z0):
    A = Z0 / 60 * math.sqrt((er + 1) / 2) + (er - 1) / (er + 1) * (0.23 + 0.11 / er)
    B = 377 * math.pi / (2 * Z0 * math.sqrt(er))
    wa = 8 * math.exp(A) / (math.exp(2 * A) - 2)
    wb = 2 / math.pi * (B - 1 - math.log(2 * B - 1) + (er - 1) / (2 * er) * (math.log(B - 1) + 0.39 - 0.61 / er))
    return wa, wb
print("synth w/h (A,B) er=3.45 Z0=50:", synth(3.45, 50))

# Hammerstad-Jensen analysis at u=2.28, t=0 for cross-check.
def hj(er, u):
    eta0 = 376.730313668
    fu = 6 + (2 * math.pi - 6) * math.exp(-(30.666 / u) ** 0.7528)
    z01 = eta0 / (2 * math.pi) * math.log(fu / u + math.sqrt(1 + 4 / u**2))
    a = 1 + math.log((u**4 + (u / 52) ** 2) / (u**4 + 0.432)) / 49 + math.log(1 + (u / 18.1) ** 3) / 18.7
    b = 0.564 * ((er - 0.9) / (er + 3)) ** 0.053
    ee = (er + 1) / 2 + (er - 1) / 2 * (1 + 10 / u) ** (-a * b)
    return z01 / math.sqrt(ee), ee
print("HJ analysis er=3.45 u=1.74/0.762:", hj(3.45, 1.74 / 0.762))
print("HJ analysis er=3.45 u=2.28:", hj(3.45, 2.28))

# Calibration transfer law
R175 = 2 * Z0 * (10 ** (0.84 / 20) - 1)
R200 = R175 * 175 / 200
print("R175", R175, "R200", R200, "IL200", 20 * math.log10(1 + R200 / (2 * Z0)))
print("series 10 ohm s21 dB:", 20 * math.log10(100 / 110))
print("RL for R=3.87:", -20 * math.log10(3.87 / 103.87))

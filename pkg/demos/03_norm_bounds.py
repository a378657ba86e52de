# How tight is the bound on ||G(t)||?
# ===================================
#
# For random matrices with eigenvalues off the imaginary axis, compare the
# actual norm with the closed-form estimate over a grid of t.  The ratio stays
# below 1; for A = [-1] it is exactly 1.

import numpy as np

from greenbound import green_bound, green_bound_terms, green_newton, op_norm, params_for, split_spectrum
from greenbound.ensembles import random_dichotomic_matrix, spawn_rngs

for n, rng in zip((2, 4, 6), spawn_rngs(11, 3)):
    A = random_dichotomic_matrix(rng, n)
    d = split_spectrum(A)
    print(f"N={n}  k={d.k}  m={d.m}  ||A||={op_norm(A):.3f}")
    for t in (-5.0, -0.5, 0.5, 5.0):
        g = op_norm(green_newton(A, d, t))
        b = green_bound(params_for(A, d, t))
        print(f"   t={t:5.1f}  ||G||={g:.3e}  bound={b:.3e}  ratio={g / b if b else 0:.3e}")

A = np.array([[-1.0]])
d = split_spectrum(A)
print("\nA=[-1]:", [(op_norm(green_newton(A, d, t)), green_bound(params_for(A, d, t))) for t in (1.0, 2.0)])

# the summands for N = 6, k = 3 (B = 2||A||, factor exp(-gamma_minus t) omitted)
print("\nk=3, m=3 terms:")
for term in green_bound_terms(3, 3):
    print(f"   {term.coef} * t^{term.pow_t} * B^{term.pow_normA} / gamma^{term.pow_inv_gamma}")

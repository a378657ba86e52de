# Green's function of x' = Ax + f
# ===============================
#
# G(t) = exp+_t(A) for t > 0 and -exp-_t(A) for t < 0.  The Newton path
# factors out the right-half-plane roots; the projector path goes through
# exp(At) and the spectral projector.  Both agree to rounding.

import numpy as np

from greenbound import green_limits, green_newton, green_projector, split_spectrum

rng = np.random.default_rng(3)
A = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
d = split_spectrum(A)
print("right roots:", np.round(d.mu, 4))
print("left roots: ", np.round(d.nu, 4))
print(f"gamma+ = {d.gamma_plus:.4f}, gamma- = {d.gamma_minus:.4f}")

print("\n    t     ||G(t)||     newton vs projector")
for t in (-5, -1, -0.1, 0.1, 1, 5):
    G = green_newton(A, d, t)
    R = green_projector(A, d, t)
    print(f"{t:6.1f}  {np.linalg.norm(G, 2):.6e}  {np.linalg.norm(G - R, 2):.2e}")

# the jump at t = 0 is the identity
plus, minus = green_limits(A, d)
print("\n||G(0+) - G(0-) - 1|| =", np.linalg.norm(plus - minus - np.eye(4), 2))

# The bounded solution x(t) = int G(t - s) f(s) ds
# ================================================
#
# The quadrature window is certified by the tail of the norm bound.  The
# central-difference residual of x' = Ax + f checks the result.

import numpy as np

from greenbound import BoundedSolver, constant_forcing, residual, sine_forcing, split_spectrum

A = np.array([[-1.0, 0.5], [0.2, 1.5]], dtype=complex)
d = split_spectrum(A)

f = constant_forcing([1.0, 1.0])
solver = BoundedSolver(A, d, f, eps=1e-8)
print("constant forcing:", solver(0.0), " steady state:", -np.linalg.solve(A, [1.0, 1.0]))
print(f"window W = {solver.W:.2f}, step h = {solver.h:.4f}")

f = sine_forcing([1.0, -1.0], omega=2.0)
solver = BoundedSolver(A, d, f, eps=1e-8)
ts = np.linspace(-3, 3, 7)
for t, x in zip(ts, solver.solve(ts)):
    print(f"t={t:5.1f}  x={np.round(x.real, 6)}  residual={residual(A, solver, f, t, 1e-3):.1e}")

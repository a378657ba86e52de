# Divided differences three ways
# ==============================
#
# The recurrence table (seeded by Taylor jets where nodes repeat), the contour
# integral, and the Lagrange-type sum for distinct nodes all give the same
# numbers.  The Gelfond-type estimate bounds them by a scaled derivative.

import numpy as np

from greenbound import (
    dd_contour_oracle,
    dd_distinct_formula,
    divided_difference_table,
    exp_fn,
    gelfond_bound,
    tilde_exp,
)

f = exp_fn(1.0)

# distinct nodes
nodes = np.array([-1.0, -2.0, -3.0])
print("table   ", divided_difference_table(f, nodes))
print("contour ", dd_contour_oracle(f, nodes, radius_margin=1.0, quad_points=256))
print("distinct", dd_distinct_formula(f, nodes))
print("gelfond ", gelfond_bound(f, nodes), ">=", abs(divided_difference_table(f, nodes)[-1]))

# repeated nodes: the table needs derivatives, the contour integral does not care
nodes = np.array([0.5, 0.5, 0.5, -1 + 1j])
print()
print("confluent table  ", divided_difference_table(f, nodes)[-1])
print("confluent contour", dd_contour_oracle(f, nodes, 1.0, 512))

# exp(zt)/prod(z - mu): the function whose divided differences on the left
# roots give the Newton coefficients of Green's function
g = tilde_exp(2.0, [1.0, 1.5 + 1j])
nu = np.array([-0.5, -0.5, -2.0])
print()
print("tilde exp table  ", divided_difference_table(g, nu))
print("tilde exp contour", dd_contour_oracle(g, nu, 0.5, 512))

# # Boundary-state intersections two ways
#
# The shift-matrix product and the constrained sum over fusion channels
# must give the same generating element.

# %%
from branecalc import (P11222_8, ground_intersection, intersection_direct, intersection_element,
                       self_spectrum_element)
from branecalc.cyclic_ring import project_even

m = P11222_8
ground = m.ground_state()
print("ground self-intersection:", ground_intersection(m))
print("value at g=1:", ground_intersection(m).coefficient_sum())

# %%
s1 = m.state((1, 0, 1, 0, 0), 0)
s2 = m.state((2, 1, 0, 0, 1), 3)
a = intersection_element(m, s1, s2)
b = intersection_direct(m, s1, s2)
print(a)
print("methods agree:", a == b, " normalisation C =", m.direct_normalization)

# %% [markdown]
# Swapping the two states conjugates the element and flips its sign.

# %%
print(intersection_element(m, s2, s1) == -a.conjugate())

# %% [markdown]
# Open-string spectrum of |1,0> on the two weight-1 factors: g - 2g^-1 + g^-3.

# %%
el = self_spectrum_element(m, m.state((1, 0, 0, 0, 0), 1), factors=[0, 1])
print(project_even(el))

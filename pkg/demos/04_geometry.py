# # Large-radius geometry of the degree-8 model
#
# Prepotential, periods, central charges and the charge-to-sheaf dictionary.

# %%
from fractions import Fraction

from branecalc import P11222_8, ChargeVector
from branecalc.geometry import (E, H, L, IntersectionRing, bps_classify, central_charge,
                                charge_to_chern, is_slope_semistable, moduli_dimension,
                                mukai_vector, period_polynomials, triple_intersection)

ring = IntersectionRing.from_model(P11222_8)
for p in period_polynomials(ring):
    print(p.as_expr())

# %%
print("H^3 =", triple_intersection(H, H, H, ring), " H^2 L =", triple_intersection(H, H, L, ring))

n = ChargeVector.of([0, 1, 0, -2, 0, 1])
print("Z at t = (1, 1):", central_charge(ring, n, 1, 1))
print("Z at t = (1/2, 2):", central_charge(ring, n, Fraction(1, 2), 2))

# %% [markdown]
# The dictionary turns this charge into c1 = E/2 and ch2 = l.

# %%
data = charge_to_chern(n)
cl, ce = data.c1_LE
print(f"r = {data.r}  c1 = {data.c1} = {cl}L + {ce}E  ch2 = {data.ch2}  ch3 = {data.ch3}")
print(bps_classify(data.r, data.c1, data.ch2).value)

# %%
v = mukai_vector(2, H, 4, ring)
print(v, "moduli dimension:", moduli_dimension(v, ring))
print("mu(O(E)) <= mu(O(H) + O) at omega = H + L:", is_slope_semistable((1, E), (2, H), H + L, 3, ring))

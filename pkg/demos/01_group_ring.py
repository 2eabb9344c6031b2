# # Arithmetic in the cyclic group ring
#
# Every Gepner-model quantity below lives in Z[r]/(r^{2K} - 1), with the
# quantum-symmetry generator g = r^2. Working in r keeps half-integer powers
# of g exact.

# %%
from branecalc import P11222_8, RingElement, project_even, reduce

model = P11222_8
print(model.name, "K =", model.K, "weights =", model.weights)

# %% [markdown]
# A weight-1 excitation operator t_1 = r^-1 + r. Squaring it lands on even
# slots only, so it has a g-basis representative.

# %%
t1 = RingElement.from_terms(model.order, {-1: 1, 1: 1})
sq = t1 * t1
print(sq)
print("g-basis:", project_even(sq))

# %% [markdown]
# The eight periods obey two relations, so g-basis vectors are reduced to
# six independent coordinates by eliminating the top two slots.

# %%
rel = model.require_relations()
print("generators:", rel.generators, "pivots:", rel.pivots)
for i in range(8):
    unit = [0] * 8
    unit[i] = 1
    print(f"g^{i} ->", reduce(unit, rel))

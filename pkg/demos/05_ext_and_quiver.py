# # Ext groups of rational curves and the brane quiver

# %%
from branecalc.ext import (brane_quiver, ext_via_spectral, k3_fiber_table, normal_ext, p1_table,
                           quiver_ext_annotation, quiver_paths, superpotential_form)

for split in [(-1, -1), (0, -2), (1, -3), (2, -4)]:
    w = superpotential_form(split)
    print(split, "Ext^1, Ext^2 =", normal_ext(split), " W:", w.form)

# %% [markdown]
# Spectral-sequence assembly: Ext^n is the anti-diagonal sum of the
# cohomology table when the sequence degenerates.

# %%
print("K3 fiber:", ext_via_spectral(k3_fiber_table()))
print("P1 with O + O(-2):", ext_via_spectral(p1_table((0, -2))))

# %%
q = brane_quiver()
for p in quiver_paths(q, 6, 0, 3):
    print(p.name)
print(quiver_ext_annotation(q, {v: k3_fiber_table() for v in q.vertices}))

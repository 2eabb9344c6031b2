# # Charges of boundary states
#
# q_G = r^M t_L1 ... t_L5 (1 - g), reduced to six periods, then mapped to the
# large-radius basis with the inverse monodromy matrix.

# %%
from branecalc import P11222_8, boundary_charge_gepner
from branecalc.charges import charge_table
from branecalc.emit import emit

m = P11222_8
print("ground state:", boundary_charge_gepner(m, m.ground_state()))

# %% [markdown]
# |1,0,0,0,0> admits eight odd values of M, giving eight charge vectors.

# %%
rows = charge_table(m, (1, 0, 0, 0, 0))
print(emit(rows, "table"))

# %% [markdown]
# Same table with the inverse applied from the right, the ordering of the
# pairing identity (n m^-1).(m Pi).

# %%
print(emit(charge_table(m, (1, 0, 0, 0, 0), "row"), "table"))

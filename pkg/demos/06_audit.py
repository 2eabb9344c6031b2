# # Comparing against the published tables
#
# Each report carries both the computed values and the published ones, and
# says whether they agree. Nothing is rounded or fitted.

# %%
from branecalc import P11222_8
from branecalc.audit import full_audit

for report in full_audit(P11222_8):
    print(f"{report.item:28s} match={report.match}")

# %%
ground = full_audit(P11222_8)[2]
print("computed", ground.computed, "published", ground.paper)
print("independent remainder oracle:", ground.details["oracle"])

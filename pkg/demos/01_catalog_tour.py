"""Build a few catalog algebras and look at their invariants."""

# %%
from leibniz_kit import catalog as cat
from leibniz_kit.field import GF, QQ
from leibniz_kit.invariants import invariant_report, upper_central_series
from leibniz_kit.linalg import render

# %% Lei4 over the rationals: a nilpotent algebra with a one-dimensional kernel
L, _ = cat.make("Lei4", {}, QQ)
rep = invariant_report(L)
for name in ("leib", "left_center", "right_center", "center", "derived_sub"):
    print(f"{name:12} {render(getattr(rep, name))}")
print("ncl", rep.nilpotency)

# %% the recorded claims, and where they disagree with the table
for field, (actual, claimed) in cat.compare_claims(L, "Lei4", {}, QQ).items():
    print(f"{field}: computed {render(actual)}, recorded {render(claimed)}")
    print("  reason:", cat.documented_discrepancy("Lei4", field))

# %% Lei37 is the nilpotent type with a two-dimensional kernel
L37, _ = cat.make("Lei37", {}, GF(5))
print([render(t) for t in upper_central_series(L37).terms])
print("ncl", invariant_report(L37).nilpotency)

# %% some tables break the identity; the catalog knows which and why
for fid in ("Lei12", "Lei20", "Lei26"):
    P = cat.default_params(fid, QQ)
    print(fid, cat.expected_non_leibniz(fid, P, QQ))

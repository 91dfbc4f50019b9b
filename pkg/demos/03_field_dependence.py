"""Which parameter values survive over which prime fields."""

# %%
from leibniz_kit import catalog as cat
from leibniz_kit.field import GF, quad_roots

# %% Lei7 needs X²+β to have no root
for p in (2, 3, 5, 7, 11, 13):
    F = GF(p)
    found = [P["beta"] for P in cat.survey_params("Lei7", F)]
    scan = [b for b in range(1, p) if not quad_roots(0, b, F)]
    print(p, found, found == scan)

# %% char 2 removes the types whose construction divides by two
for fid in ("Lei24", "Lei25"):
    print(fid, len(cat.survey_params(fid, GF(2))), len(cat.survey_params(fid, GF(3))))

# %% a side condition that is never satisfied: an element outside Fa1⊕Fa3
# always squares to zero, so the recorded condition fails with a witness
_, (status,) = cat.make("Lei20", {"sigma": 1}, GF(3))
print(status)

"""Hide a catalog algebra behind a random basis and recover it."""

# %%
import random

from leibniz_kit import catalog as cat
from leibniz_kit.algebra import apply_basis_change
from leibniz_kit.classifier import classify, replay
from leibniz_kit.field import GF
from leibniz_kit.linalg import det

F = GF(5)
rnd = random.Random(7)


def random_basis():
    while True:
        P = tuple(tuple(rnd.randrange(5) for _ in range(3)) for _ in range(3))
        if det(F, P):
            return P


# %% Lei40 with β=2, γ=1, written in a scrambled basis
L, _ = cat.make("Lei40", {"beta": 2, "gamma": 1}, F)
M = apply_basis_change(L, random_basis())
print(M.sparse())

# %% classify and check the witness by hand
r = classify(M)
print(r.describe(F))
target = cat.table_of(r.id, r.params, F)
print("witness transports exactly:", apply_basis_change(M, r.witness).table == target.table)

# %% every decision in the trace can be re-evaluated on the input
for rec in r.trace:
    print(f"{rec.step:8} {rec.text:45} replay ok: {replay(M, rec)}")

# %% several catalog types overlap, so the reported id can depend on the basis
print(sorted(cat.possible_results("Lei4")))
seen = {classify(apply_basis_change(cat.make("Lei4", {}, F)[0], random_basis())).id
        for _ in range(30)}
print(sorted(seen))

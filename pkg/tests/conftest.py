import os
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from leibniz_kit.field import GF, QQ

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)
SEED = int(os.environ.get("LEIBNIZ_KIT_SEED", "20240601"))


@pytest.fixture
def rng():
    return random.Random(SEED)


def prime_fields():
    return st.sampled_from(SMALL_PRIMES).map(GF)


def scalars(F):
    if F.is_finite:
        return st.integers(0, F.p - 1)
    return st.fractions(min_value=-20, max_value=20, max_denominator=12)


fields = st.one_of(st.just(QQ), prime_fields())


@st.composite
def field_and_scalars(draw, k=2):
    F = draw(fields)
    return F, [draw(scalars(F)) for _ in range(k)]


@st.composite
def vectors(draw, F, n):
    return tuple(draw(scalars(F)) for _ in range(n))


@st.composite
def matrices(draw, F, n):
    return tuple(draw(vectors(F, n)) for _ in range(n))


def random_invertible(F, n, rnd):
    from leibniz_kit.linalg import det

    while True:
        if F.is_finite:
            P = tuple(tuple(rnd.randrange(F.p) for _ in range(n)) for _ in range(n))
        else:
            P = tuple(tuple(Fraction(rnd.randint(-3, 3)) for _ in range(n)) for _ in range(n))
        if det(F, P) != 0:
            return P


def catalog_instances(F, leibniz_only=True, dim=None):
    """(id, params, algebra) for each family's default parameters over F."""
    from leibniz_kit.algebra import check_leibniz
    from leibniz_kit.catalog import default_params, list_types, make

    out = []
    for fid, d, _ in list_types():
        if dim is not None and d != dim:
            continue
        P = default_params(fid, F)
        if P is None:
            continue
        L, _ = make(fid, P, F)
        if leibniz_only and check_leibniz(L) is not None:
            continue
        out.append((fid, P, L))
    return out


@st.composite
def transported(draw, F, leibniz_only=True):
    """A catalog instance over F rewritten in a random basis."""
    from leibniz_kit.algebra import apply_basis_change
    from leibniz_kit.linalg import det

    insts = catalog_instances(F, leibniz_only, dim=3)
    fid, P, L = draw(st.sampled_from(insts))
    M = draw(matrices(F, 3).filter(lambda M: det(F, M) != 0))
    return fid, P, L, apply_basis_change(L, M)

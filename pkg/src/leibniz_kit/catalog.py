"""The 2- and 3-dimensional Leibniz algebra types Lei1(2) .. Lei42(3).

Each family records its structure constants as a function of its parameters,
the hard constraints on those parameters, the anisotropy side condition
where one is claimed, and the claimed values of the basic invariants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Callable, Optional, Union

from .algebra import Algebra, bracket
from .field import Field, Scalar, quad_roots
from .invariants import NON_NILPOTENT, compare_reports, invariant_report
from .linalg import Subspace, Vector, is_zero, span, unit_vec

PARAM_ORDER = ("alpha", "beta", "gamma", "delta", "sigma", "tau")
GREEK = {"alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ", "sigma": "σ", "tau": "τ"}


class CatalogError(ValueError):
    pass


class InvalidParameter(CatalogError):
    pass


class CharNotAllowed(CatalogError):
    pass


class UnsupportedParamName(CatalogError):
    pass


class UnknownType(CatalogError):
    pass


class InfiniteField(CatalogError):
    pass


NOT_CHECKABLE = "not_checkable"


@dataclass(frozen=True)
class SideConditionStatus:
    condition: str
    satisfied: Union[bool, str]
    witness: Optional[Vector] = None


@dataclass(frozen=True)
class Constraint:
    kind: str  # nonzero | exclude | char | rootless
    text: str
    holds: Callable[[Field, dict], bool]


def _nonzero(name: str) -> Constraint:
    return Constraint("nonzero", f"{GREEK[name]}≠0", lambda F, P: P[name] != 0)


def _exclude(name: str, values: tuple[int, ...]) -> Constraint:
    txt = ",".join(f"{GREEK[name]}≠{v}" for v in values)
    return Constraint("exclude", txt, lambda F, P: all(P[name] != F(v) for v in values))


def _char_not(c: int) -> Constraint:
    return Constraint("char", f"char(F)≠{c}", lambda F, P: F.char != c)


def _rootless(text: str, coeffs: Callable[[Field, dict], tuple]) -> Constraint:
    def holds(F: Field, P: dict) -> bool:
        b, c = coeffs(F, P)
        return not quad_roots(F(b), F(c), F)

    return Constraint("rootless", f"{text} has no root in F", holds)


# side conditions: coefficients of the quadratic form in (λ, μ, ν) on
# monomials λ², λμ, λν, μ², μν, ν²; the element is λa1+μa2+νa3 ∉ Fa1⊕Fa3


@dataclass(frozen=True)
class SideCondition:
    text: str
    form: Callable[[Field, dict], tuple]


@dataclass(frozen=True)
class Family:
    number: int
    dim: int
    params: tuple[str, ...]
    table: Callable[[Field, dict], dict]
    claims: dict
    case: str
    constraints: tuple[Constraint, ...] = ()
    derived: dict = dc_field(default_factory=dict)
    side: Optional[SideCondition] = None

    @property
    def id(self) -> str:
        return f"Lei{self.number}({self.dim})"


A1, A2, A3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
NN = NON_NILPOTENT


def _c(*terms) -> tuple:
    """Linear combination of basis triples: _c((2, A1), (a, A3))."""
    out = [0, 0, 0]
    for coef, v in terms:
        for k in range(3):
            out[k] += coef * v[k]
    return tuple(out)


def _claims(leib, lc, rc, z, der, nil=None) -> dict:
    d = {"leib": leib, "left_center": lc, "right_center": rc, "center": z, "derived_sub": der}
    if nil is not None:
        d["nilpotency"] = nil
    return d


_T1 = "dim Leib=1, Leib central, L/Leib abelian"
_T2 = "dim Leib=1, Leib central, L/Leib non-abelian"
_T3 = "dim Leib=1, Leib not central, L/Leib abelian"
_T4 = "dim Leib=1, Leib not central, L/Leib non-abelian"
_T5 = "dim Leib=2, nilpotent"
_T6 = "dim Leib=2, non-nilpotent, nonzero center"
_T7 = "dim Leib=2, zero center"

_all3 = _claims((3,), (3,), (3,), (3,), (3,), 2)


def _fam(number, params, table, claims, case, constraints=(), derived=None, side=None) -> Family:
    return Family(number, 3, params, table, claims, case, tuple(constraints), derived or {}, side)


def _derived27(F: Field, P: dict) -> Scalar:
    a = P["alpha"]
    return F.div(a, F.add(F.one, a))


def _derived34(F: Field, P: dict) -> Scalar:
    a, g = P["alpha"], P["gamma"]
    return F.div(F.add(a, g), F.add(F.one, a))


FAMILIES: dict[str, Family] = {}


def _register(f: Family) -> None:
    FAMILIES[f.id] = f


_register(Family(1, 2, (), lambda F, P: {(1, 1): (0, 1)}, {}, "dim 2, nilpotent"))
_register(Family(2, 2, (), lambda F, P: {(1, 1): (0, 1), (1, 2): (0, 1)}, {}, "dim 2, non-nilpotent"))

for _f in [
    _fam(3, (), lambda F, P: {(1, 1): A3},
         _claims((3,), (2, 3), (2, 3), (2, 3), (3,), 2), _T1),
    _fam(4, (), lambda F, P: {(1, 1): A3, (1, 2): A3},
         _claims((3,), (2, 3), (3,), (3,), (3,), 2), _T1),
    _fam(5, (), lambda F, P: {(1, 1): A3, (2, 1): A3},
         _claims((3,), (3,), (2, 3), (3,), (3,), 2), _T1),
    _fam(6, ("alpha",), lambda F, P: {(1, 1): A3, (2, 1): A3, (1, 2): _c((P["alpha"], A3))},
         _all3, _T1, [_nonzero("alpha")]),
    _fam(7, ("beta",), lambda F, P: {(1, 1): A3, (2, 2): _c((P["beta"], A3))},
         _all3, _T1, [_nonzero("beta"), _rootless("X²+β", lambda F, P: (0, P["beta"]))]),
    _fam(8, ("alpha", "beta"),
         lambda F, P: {(1, 1): A3, (1, 2): _c((P["alpha"], A3)), (2, 2): _c((P["beta"], A3))},
         _all3, _T1,
         [_nonzero("alpha"), _nonzero("beta"),
          _rootless("X²+αX+β", lambda F, P: (P["alpha"], P["beta"]))]),
    _fam(9, ("sigma",),
         lambda F, P: {(1, 1): A3, (2, 1): A3, (2, 2): _c((P["sigma"], A3))},
         _all3, _T1, [_nonzero("sigma"), _rootless("X²+X+σ", lambda F, P: (1, P["sigma"]))]),
    _fam(10, ("sigma", "tau"),
         lambda F, P: {(1, 1): A3, (2, 1): A3, (1, 2): _c((P["tau"], A3)),
                       (2, 2): _c((P["sigma"], A3))},
         _all3, _T1,
         [_nonzero("tau"), _nonzero("sigma"),
          _rootless("X²+(τ+1)X+σ", lambda F, P: (P["tau"] + 1, P["sigma"]))]),
    _fam(11, (), lambda F, P: {(1, 1): A3, (1, 2): _c((-1, A1)), (2, 1): A1},
         _claims((3,), (3,), (3,), (3,), (1, 3), NN), _T2),
    _fam(12, ("alpha",),
         lambda F, P: {(1, 1): A3, (1, 2): _c((-1, A1), (-P["alpha"], A3)),
                       (2, 1): _c((1, A1), (P["alpha"], A3))},
         _claims((3,), (3,), (3,), (3,), (1, 3), NN), _T2, [_nonzero("alpha")]),
    _fam(13, ("gamma",),
         lambda F, P: {(1, 1): A3, (1, 2): _c((-1, A1)), (2, 1): A1, (2, 2): _c((P["gamma"], A3))},
         _claims((3,), (3,), (3,), (3,), (1, 3), NN), _T2,
         [_nonzero("gamma"), _rootless("X²+γ", lambda F, P: (0, P["gamma"]))]),
    _fam(14, ("alpha", "gamma"),
         lambda F, P: {(1, 1): A3, (1, 2): _c((-1, A1), (-P["alpha"], A3)),
                       (2, 1): _c((1, A1), (P["alpha"], A3)), (2, 2): _c((P["gamma"], A3))},
         _claims((3,), (3,), (3,), (3,), (1, 3), NN), _T2,
         [_nonzero("alpha"), _nonzero("gamma"), _rootless("X²+γ", lambda F, P: (0, P["gamma"]))]),
    _fam(15, (), lambda F, P: {(1, 1): A3, (1, 2): A2, (2, 1): _c((-1, A2))},
         _claims((3,), (3,), (3,), (3,), (2, 3), NN), _T2),
    _fam(16, ("alpha",),
         lambda F, P: {(1, 1): A3, (1, 2): _c((1, A2), (P["alpha"], A3)),
                       (2, 1): _c((-1, A2), (-P["alpha"], A3))},
         _claims((3,), (3,), (3,), (3,), (2, 3), NN), _T2, [_nonzero("alpha")]),
    _fam(17, (), lambda F, P: {(1, 1): A3, (1, 3): A3},
         _claims((3,), (2, 3), (2,), (2,), (3,), NN), _T3),
    _fam(18, (), lambda F, P: {(1, 1): A3, (1, 2): A3, (1, 3): A3},
         _claims((3,), (2, 3), (), (), (3,), NN), _T3),
    _fam(19, (), lambda F, P: {(1, 1): A3, (1, 3): A3, (2, 1): A3, (2, 3): A3},
         _claims((3,), (3,), (2,), (), (3,), NN), _T3),
    _fam(20, ("sigma",),
         lambda F, P: {(1, 1): A3, (1, 3): A3, (2, 2): _c((P["sigma"], A3))},
         _claims((3,), (3,), (), (), (3,), NN), _T3, [_nonzero("sigma")],
         side=SideCondition("α²+αγ+β²σ≠0", lambda F, P: (1, 0, 1, P["sigma"], 0, 0))),
    _fam(21, ("tau",),
         lambda F, P: {(1, 1): A3, (1, 2): A3, (1, 3): A3, (2, 2): _c((P["tau"], A3))},
         _claims((3,), (3,), (), (), (3,), NN), _T3, [_nonzero("tau")],
         side=SideCondition("α²+αβ+αγ+β²τ≠0", lambda F, P: (1, 1, 1, P["tau"], 0, 0))),
    _fam(22, ("tau",),
         lambda F, P: {(1, 1): A3, (1, 3): A3, (2, 1): A3, (2, 3): A3, (2, 2): _c((P["tau"], A3))},
         _claims((3,), (3,), (), (), (3,), NN), _T3, [_nonzero("tau")],
         side=SideCondition("α²+αγ+αβ+β²τ+βγ≠0", lambda F, P: (1, 1, 1, P["tau"], 1, 0))),
    _fam(23, ("delta", "tau"),
         lambda F, P: {(1, 1): A3, (1, 3): A3, (2, 1): A3, (2, 3): A3,
                       (2, 2): _c((P["tau"], A3)), (1, 2): _c((P["delta"], A3))},
         _claims((3,), (3,), (), (), (3,), NN), _T3, [_nonzero("delta"), _nonzero("tau")],
         side=SideCondition("α²+αβδ+αγ+αβ+β²τ+βγ≠0",
                            lambda F, P: (1, P["delta"] + 1, 1, P["tau"], 1, 0))),
    _fam(24, (), lambda F, P: {(1, 1): A3, (1, 2): _c((-1, A1)), (2, 1): A1, (2, 3): _c((2, A3))},
         _claims((3,), (3,), (), (), (1, 3), NN), _T4, [_char_not(2)]),
    _fam(25, ("alpha",),
         lambda F, P: {(1, 1): A3, (1, 2): _c((-1, A1), (P["alpha"], A3)),
                       (2, 1): _c((1, A1), (P["alpha"], A3)), (2, 3): _c((2, A3))},
         _claims((3,), (3,), (), (), (1, 3), NN), _T4, [_char_not(2), _nonzero("alpha")]),
    _fam(26, (),
         lambda F, P: {(1, 1): A3, (1, 3): A3, (1, 2): _c((-1, A1)), (2, 1): A1,
                       (2, 3): _c((2, A3))},
         _claims((3,), (3,), (), (), (1, 3), NN), _T4, [_char_not(2)]),
    _fam(27, ("alpha",),
         lambda F, P: {(1, 1): A3, (1, 3): A3, (1, 2): _c((-1, A1), (P["beta"], A3)),
                       (2, 1): _c((1, A1), (P["alpha"], A3)),
                       (2, 3): _c((2 + P["alpha"], A3))},
         _claims((3,), (3,), (), (), (1, 3), NN), _T4, [_exclude("alpha", (0, -1, -2))],
         derived={"beta": _derived27}),
    _fam(28, ("gamma",),
         lambda F, P: {(1, 1): A3, (1, 2): _c((-1, A1)), (2, 1): A1,
                       (2, 2): _c((P["gamma"], A3)), (2, 3): _c((2, A3))},
         _claims((3,), (3,), (), (), (1, 3), NN), _T4, [_char_not(2), _nonzero("gamma")],
         side=SideCondition("λ²+μ²γ+2μν≠0", lambda F, P: (1, 0, 0, P["gamma"], 2, 0))),
    _fam(29, ("alpha", "gamma"),
         lambda F, P: {(1, 1): A3, (1, 2): _c((-1, A1), (P["alpha"], A3)),
                       (2, 1): _c((1, A1), (P["alpha"], A3)),
                       (2, 2): _c((P["gamma"], A3)), (2, 3): _c((2, A3))},
         _claims((3,), (3,), (), (), (1, 3), NN), _T4,
         [_char_not(2), _nonzero("alpha"), _nonzero("gamma")],
         side=SideCondition("λ²+2λμα+μ²γ+2μν≠0",
                            lambda F, P: (1, 2 * P["alpha"], 0, P["gamma"], 2, 0))),
    _fam(30, ("gamma",),
         lambda F, P: {(1, 1): A3, (1, 3): A3, (1, 2): _c((-1, A1), (P["gamma"], A3)),
                       (2, 1): A1, (2, 2): _c((P["gamma"], A3)), (2, 3): _c((2, A3))},
         _claims((3,), (3,), (), (), (1, 3), NN), _T4, [_char_not(2), _nonzero("gamma")],
         side=SideCondition("λ²+λμγ+λν+μ²γ+2μν≠0",
                            lambda F, P: (1, P["gamma"], 1, P["gamma"], 2, 0))),
    _fam(31, (),
         lambda F, P: {(1, 1): A3, (1, 3): A3, (2, 2): A3, (2, 3): A3,
                       (1, 2): _c((-1, A1)), (2, 1): _c((1, A1), (-1, A3))},
         _claims((3,), (3,), (), (), (1, 3), NN), _T4,
         side=SideCondition("λ²+λν−λμ+μ²+μν≠0", lambda F, P: (1, -1, 1, 1, 1, 0))),
    _fam(32, ("beta",),
         lambda F, P: {(1, 1): A3, (1, 3): A3, (2, 2): A3, (2, 3): A3,
                       (1, 2): _c((-1, A1), (P["beta"], A3)), (2, 1): _c((1, A1), (-1, A3))},
         _claims((3,), (3,), (), (), (1, 3), NN), _T4, [_nonzero("beta")],
         side=SideCondition("λ²+λμβ+λν−λμ+μ²+μν≠0",
                            lambda F, P: (1, P["beta"] - 1, 1, 1, 1, 0))),
    _fam(33, ("gamma",),
         lambda F, P: {(1, 1): A3, (1, 3): A3, (1, 2): _c((-1, A1)),
                       (2, 1): _c((1, A1), (-P["gamma"], A3)), (2, 2): _c((P["gamma"], A3)),
                       (2, 3): _c((2 - P["gamma"], A3))},
         _claims((3,), (3,), (), (), (1, 3), NN), _T4, [_exclude("gamma", (0, 1, 2))],
         side=SideCondition("λ²+λν−λμγ+μ²γ+μν(2−γ)≠0",
                            lambda F, P: (1, -P["gamma"], 1, P["gamma"], 2 - P["gamma"], 0))),
    _fam(34, ("alpha", "gamma"),
         lambda F, P: {(1, 1): A3, (1, 3): A3, (1, 2): _c((-1, A1), (P["beta"], A3)),
                       (2, 1): _c((1, A1), (P["alpha"], A3)), (2, 2): _c((P["gamma"], A3)),
                       (2, 3): _c((2 + P["alpha"], A3))},
         _claims((3,), (3,), (), (), (1, 3), NN), _T4,
         [_exclude("alpha", (0, -1, -2)), _nonzero("gamma")],
         derived={"beta": _derived34},
         side=SideCondition("λ²+λμβ+λν+λμα+μ²γ+μν(2+α)≠0",
                            lambda F, P: (1, P["beta"] + P["alpha"], 1, P["gamma"],
                                          2 + P["alpha"], 0))),
    _fam(35, ("gamma",),
         lambda F, P: {(1, 1): _c((P["gamma"], A3)), (1, 2): A2, (1, 3): A3, (2, 1): _c((-1, A2))},
         _claims((3,), (3,), (), (), (2, 3), NN), _T4, [_nonzero("gamma")]),
    _fam(36, ("beta", "gamma"),
         lambda F, P: {(1, 1): _c((P["gamma"], A3)), (1, 2): A2, (1, 3): A3,
                       (2, 1): _c((-1, A2), (P["beta"], A3))},
         _claims((3,), (3,), (), (), (2, 3), NN), _T4, [_nonzero("gamma"), _nonzero("beta")]),
    _fam(37, (), lambda F, P: {(1, 1): A2, (1, 2): A3},
         _claims((2, 3), (2, 3), (3,), (3,), (2, 3), 3), _T5),
    _fam(38, (), lambda F, P: {(1, 1): A2, (1, 2): _c((1, A2), (1, A3))},
         _claims((2, 3), (2, 3), (3,), (3,), (2, 3), NN), _T6),
    _fam(39, ("beta",), lambda F, P: {(1, 1): A2, (1, 2): A2, (1, 3): _c((P["beta"], A3))},
         _claims((2, 3), (2, 3), (), (), (2, 3)), _T7, [_nonzero("beta")]),
    _fam(40, ("beta", "gamma"),
         lambda F, P: {(1, 1): A2, (1, 2): _c((1, A2), (P["gamma"], A3)),
                       (1, 3): _c((P["beta"], A3))},
         _claims((2, 3), (2, 3), (), (), (2, 3)), _T7, [_nonzero("gamma"), _nonzero("beta")]),
    _fam(41, ("gamma",), lambda F, P: {(1, 1): A2, (1, 2): _c((P["gamma"], A3)), (1, 3): A3},
         _claims((2, 3), (2, 3), (), (), (2, 3)), _T7, [_nonzero("gamma")]),
    _fam(42, ("beta", "gamma"),
         lambda F, P: {(1, 1): A2, (1, 2): A3, (1, 3): _c((P["beta"], A2), (P["gamma"], A3))},
         _claims((2, 3), (2, 3), (), (), (2, 3)), _T7,
         [_rootless("X²−γX−β", lambda F, P: (-P["gamma"], -P["beta"]))]),
]:
    _register(_f)


_ID_RE = re.compile(r"^\s*Lei\s*(\d+)\s*(?:\(\s*(\d)\s*\)|_(\d))?\s*$")


def resolve(id_text: Union[str, Family]) -> Family:
    """Accept ``Lei7(3)``, ``Lei7_3`` or plain ``Lei7``."""
    if isinstance(id_text, Family):
        return id_text
    m = _ID_RE.match(id_text)
    if m is None:
        raise UnknownType(f"unknown catalog id {id_text!r}")
    number = int(m.group(1))
    dim = m.group(2) or m.group(3)
    dim = int(dim) if dim else (2 if number <= 2 else 3)
    key = f"Lei{number}({dim})"
    if key not in FAMILIES:
        raise UnknownType(f"unknown catalog id {id_text!r}")
    return FAMILIES[key]


def list_types() -> list[tuple[str, int, str]]:
    return [(f.id, f.dim, f.case) for f in FAMILIES.values()]


def param_spec(id_text) -> dict:
    fam = resolve(id_text)
    return {
        "id": fam.id,
        "params": list(fam.params),
        "derived": {k: _DERIVED_TEXT[fam.number] for k in fam.derived},
        "constraints": [(c.kind, c.text) for c in fam.constraints],
        "side_condition": fam.side.text if fam.side else None,
    }


_DERIVED_TEXT = {27: "β=α(1+α)⁻¹", 34: "β=(α+γ)(1+α)⁻¹"}


def _normalize(fam: Family, params: dict, F: Field) -> dict:
    for name in params:
        if name not in fam.params:
            raise UnsupportedParamName(f"{fam.id} has no parameter {name!r}")
    P = {}
    for name in fam.params:
        if name not in params:
            raise InvalidParameter(f"{fam.id} requires parameter {name!r}")
        v = params[name]
        P[name] = F.parse_scalar(v) if isinstance(v, str) else F(v)
    return P


def check_params(id_text, params: dict, F: Field) -> dict:
    """Validated, field-coerced parameters including derived ones."""
    fam = resolve(id_text)
    P = _normalize(fam, params, F)
    for c in fam.constraints:
        if c.kind == "char" and not c.holds(F, P):
            raise CharNotAllowed(f"{fam.id}: {c.text}")
    for c in fam.constraints:
        if c.kind != "char" and not c.holds(F, P):
            raise InvalidParameter(f"{fam.id}: {c.text}")
    for name, fn in fam.derived.items():
        P[name] = fn(F, P)
    return P


def table_of(id_text, params: dict, F: Field) -> Algebra:
    fam = resolve(id_text)
    P = check_params(fam, params, F)
    br = {(i - 1, j - 1): v for (i, j), v in fam.table(F, P).items()}
    return Algebra.from_brackets(F, fam.dim, br)


def make(id_text, params: Optional[dict], F: Field) -> tuple[Algebra, list[SideConditionStatus]]:
    fam = resolve(id_text)
    params = params or {}
    L = table_of(fam, params, F)
    P = check_params(fam, params, F)
    statuses = [side_condition_status(fam, P, F)] if fam.side else []
    return L, statuses


def _form_value(F: Field, q: tuple, lam, mu, nu) -> Scalar:
    mons = (lam * lam, lam * mu, lam * nu, mu * mu, mu * nu, nu * nu)
    s = F.zero
    for c, m in zip(q, mons):
        s = F.add(s, F.mul(F(c), F(m)))
    return s


def side_condition_status(id_text, P: dict, F: Field) -> SideConditionStatus:
    """Search for λa1+μa2+νa3 with μ≠0 on which the claimed form vanishes."""
    fam = resolve(id_text)
    q = tuple(F(c) for c in fam.side.form(F, P))
    text = fam.side.text
    if F.is_finite:
        for lam, mu, nu in product(range(F.p), range(1, F.p), range(F.p)):
            if _form_value(F, q, lam, mu, nu) == 0:
                return SideConditionStatus(text, False, (lam, mu, nu))
        return SideConditionStatus(text, True)
    w = _rational_zero(F, q)
    if w is NOT_CHECKABLE:
        return SideConditionStatus(text, NOT_CHECKABLE)
    if w is None:
        return SideConditionStatus(text, True)
    return SideConditionStatus(text, False, w)


def _rational_zero(F: Field, q: tuple):
    """Zero of the form with μ = 1, found in closed form."""
    c_ll, c_lm, c_ln, c_mm, c_mn, c_nn = q
    if c_nn != 0:
        return NOT_CHECKABLE
    # with μ = 1: c_ll λ² + c_lm λ + c_mm + ν (c_ln λ + c_mn)
    if c_ln != 0 or c_mn != 0:
        lam = F.zero if c_mn != 0 else F.one
        rest = F.add(F.add(F.mul(c_ll, lam * lam), F.mul(c_lm, lam)), c_mm)
        nu = F.neg(F.div(rest, F.add(F.mul(c_ln, lam), c_mn)))
        return (lam, F.one, nu)
    if c_ll != 0:
        roots = quad_roots(F.div(c_lm, c_ll), F.div(c_mm, c_ll), F)
        return (roots[0], F.one, F.zero) if roots else None
    if c_lm != 0:
        return (F.neg(F.div(c_mm, c_lm)), F.one, F.zero)
    return (F.zero, F.one, F.zero) if c_mm == 0 else None


def _subspace(F: Field, n: int, idx: tuple) -> Subspace:
    return span(F, (unit_vec(F, n, i - 1) for i in idx), n)


def expected_report(id_text, params: Optional[dict], F: Field) -> dict:
    """Claimed invariant values as Subspaces in the standard basis."""
    fam = resolve(id_text)
    check_params(fam, params or {}, F)
    out = {}
    for k, v in fam.claims.items():
        out[k] = v if k == "nilpotency" else _subspace(F, fam.dim, v)
    return out


def compare_claims(L: Algebra, id_text, params: Optional[dict], F: Field) -> dict:
    """Claimed invariants that differ from the computed ones, as {name: (actual, claimed)}."""
    return compare_reports(invariant_report(L), expected_report(id_text, params, F))


def _candidates(F: Field, limit: int = 12):
    if F.is_finite:
        return list(range(F.p))
    out = []
    for k in range(1, limit + 1):
        out += [k, -k]
    return out


def default_params(id_text, F: Field) -> Optional[dict]:
    """Smallest valid parameters in ascending search order, or None."""
    fam = resolve(id_text)
    for values in product(_candidates(F), repeat=len(fam.params)):
        P = dict(zip(fam.params, values))
        try:
            check_params(fam, P, F)
        except CatalogError:
            continue
        return {k: F(v) for k, v in P.items()}
    return None


def survey_params(id_text, F: Field) -> list[dict]:
    fam = resolve(id_text)
    if not F.is_finite:
        raise InfiniteField("only finite fields can be surveyed")
    found = []
    for values in product(range(F.p), repeat=len(fam.params)):
        P = dict(zip(fam.params, values))
        try:
            check_params(fam, P, F)
        except CatalogError:
            continue
        found.append(P)
    return found


def format_params(params: dict, F: Field) -> str:
    names = [k for k in PARAM_ORDER if k in params]
    return ", ".join(f"{k}={F.format(params[k])}" for k in names)


def square_is_zero(L: Algebra, v: Vector) -> bool:
    return is_zero(bracket(L, v, v))


_RANK_ONE = ("L/Leib(L) abelian with Leib(L)=Fa3 forces [x,y]=f(x)g(y)a3, so both one-sided "
             "centers are planes meeting in a nonzero line")
_LEIB_TWO = ("left multiplications by Leib(L) vanish and x ↦ [a1,x] has rank at most 2, "
             "so ζ^right(L) is never zero")

# Claimed invariants that disagree with the tables.  Each entry names the
# fields that differ and why; the claims themselves are kept as recorded.
KNOWN_DISCREPANCIES: dict[str, dict[str, str]] = {
    "Lei4(3)": {"right_center": "[a1,a1]=[a1,a2] makes a1−a2 right-central"},
    "Lei5(3)": {"left_center": "[a1,x]=[a2,x] on the basis makes a1−a2 left-central"},
    "Lei17(3)": {"right_center": "[a1,a1]=[a1,a3] makes a1−a3 right-central"},
    "Lei18(3)": {"right_center": _RANK_ONE, "center": _RANK_ONE},
    "Lei19(3)": {"left_center": _RANK_ONE, "right_center": _RANK_ONE, "center": _RANK_ONE},
    "Lei20(3)": {"right_center": "[a1,a1]=[a1,a3] makes a1−a3 right-central"},
    "Lei21(3)": {"right_center": "[a1,a1]=[a1,a3] makes a1−a3 right-central"},
    "Lei22(3)": {"right_center": "[a1,a1]=[a1,a3] makes a1−a3 right-central"},
    "Lei23(3)": {"left_center": _RANK_ONE, "right_center": _RANK_ONE, "center": _RANK_ONE},
    "Lei39(3)": {"right_center": _LEIB_TWO},
    "Lei40(3)": {"right_center": _LEIB_TWO},
    "Lei41(3)": {"right_center": _LEIB_TWO,
                 "center": "a2−γa3 is central"},
    "Lei42(3)": {"right_center": _LEIB_TWO},
}


def documented_discrepancy(id_text, field_name: str) -> Optional[str]:
    fam = resolve(id_text)
    return KNOWN_DISCREPANCIES.get(fam.id, {}).get(field_name)


def _always(F: Field, P: dict) -> bool:
    return True


# Tables that violate the Leibniz identity, with the parameter region where
# they do so and the reason.
KNOWN_NON_LEIBNIZ: dict[str, tuple[Callable[[Field, dict], bool], str]] = {}
for _n in (11, 12, 13, 14):
    KNOWN_NON_LEIBNIZ[f"Lei{_n}(3)"] = (
        lambda F, P: F.char != 2,
        "at (a1,a2,a1) the sides are −a3 and a3, equal only in characteristic 2",
    )
for _n in (20, 21, 22):
    KNOWN_NON_LEIBNIZ[f"Lei{_n}(3)"] = (
        _always,
        "at (a1,a2,a2) the left side is 0 and the right side is [a1,[a2,a2]], "
        "a nonzero multiple of a3",
    )
KNOWN_NON_LEIBNIZ["Lei23(3)"] = (
    lambda F, P: P["delta"] != P["tau"],
    "at (a1,a2,a2) the sides are 0 and (τ−δ)a3",
)
for _n in (26, 27, 30, 31, 32, 33, 34):
    KNOWN_NON_LEIBNIZ[f"Lei{_n}(3)"] = (
        _always, "at (a1,a2,a3) the left side is [[a1,a2],a3] = −a3 and the right side is 0",
    )


def expected_non_leibniz(id_text, params: dict, F: Field) -> Optional[str]:
    """Reason the table is known to break the identity, or None."""
    fam = resolve(id_text)
    entry = KNOWN_NON_LEIBNIZ.get(fam.id)
    if entry is None:
        return None
    P = check_params(fam, params, F)
    return entry[1] if entry[0](F, P) else None


# Types whose tables reduce to another type's normal form for every valid
# parameter choice.  The classifier reports the target.
KNOWN_COLLAPSES: dict[str, tuple[str, str]] = {
    "Lei18(3)": ("Lei17(3)", _RANK_ONE),
    "Lei19(3)": ("Lei17(3)", _RANK_ONE),
    "Lei23(3)": ("Lei17(3)", _RANK_ONE),
    "Lei28(3)": ("Lei24(3)", "a2−(γ/2)a3 squares to zero, so the null-complement branch applies"),
    "Lei29(3)": ("Lei25(3)", "a2−(γ/2)a3 squares to zero, so the null-complement branch applies"),
    "Lei41(3)": ("Lei38(3)", "a2−γa3 is central"),
}

# Groups of types that share isomorphism classes.  The normal forms depend on
# which element plays a1 or b, so one algebra can land on any member of its
# group depending on the input basis.  Each member was carried onto another
# member by classifying a random basis change with a verified witness.
KNOWN_OVERLAPS: tuple[frozenset, ...] = (
    frozenset({"Lei4(3)", "Lei5(3)"}),
    frozenset({"Lei7(3)", "Lei8(3)", "Lei9(3)", "Lei10(3)"}),
    frozenset({"Lei15(3)", "Lei16(3)"}),
    frozenset({"Lei24(3)", "Lei25(3)"}),
    frozenset({"Lei35(3)", "Lei36(3)"}),
    frozenset({"Lei39(3)", "Lei40(3)"}),
)


def possible_results(id_text) -> frozenset:
    """Ids the classifier may report for an algebra built from this type."""
    fid = resolve(id_text).id
    target = KNOWN_COLLAPSES.get(fid, (fid, ""))[0]
    for group in KNOWN_OVERLAPS:
        if target in group:
            return group
    return frozenset({target})

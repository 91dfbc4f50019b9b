"""Classify a 3-dimensional non-Lie Leibniz algebra into a catalog type.

The procedure mirrors the constructive case analysis of the classification:
it splits on the dimension of the Leibniz kernel, whether the kernel is
central and whether L/Leib(L) is abelian, then builds the adapted basis
a1, a2, a3 step by step.  Every test that steers the computation is logged
as a :class:`DecisionRecord` that can be replayed against the input.  The
result is only returned after the change of basis has been checked to carry
the input table exactly onto the catalog table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .algebra import (
    Algebra,
    apply_basis_change,
    bracket,
    check_leibniz,
    is_lie,
    polarization_candidates,
    product_subspace,
)
from .catalog import CatalogError, format_params, table_of
from .field import Field, Scalar, quad_roots
from .invariants import center, is_nilpotent, leibniz_kernel, upper_central_series
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    complement_vector,
    contains,
    coordinates,
    det,
    eigen_lines_2x2,
    full_space,
    is_zero,
    span,
    vadd,
    vcomb,
    vscale,
    vsub,
)


class ClassificationError(ValueError):
    pass


class NotDimensionThree(ClassificationError):
    pass


class NotLeibniz(ClassificationError):
    def __init__(self, triple):
        super().__init__(f"Leibniz identity fails at basis triple {triple}")
        self.triple = triple


class IsLieAlgebra(ClassificationError):
    pass


class ClassificationFailed(ClassificationError):
    def __init__(self, reason: str, trace=()):
        super().__init__(reason)
        self.reason = reason
        self.trace = tuple(trace)


@dataclass(frozen=True)
class DecisionRecord:
    step: str
    predicate: str  # key into PREDICATES
    args: tuple
    outcome: Any
    text: str = ""
    chosen: tuple = ()  # (name, vector) pairs fixed at this step


@dataclass(frozen=True)
class ClassificationResult:
    id: str
    params: dict
    witness: Matrix
    trace: tuple

    def describe(self, F: Field) -> str:
        p = format_params(self.params, F)
        return f"{self.id}, {p}" if p else self.id


# -- search helpers -----------------------------------------------------


def find_square_witness(L: Algebra) -> Vector:
    """First of e1, e2, e3, e1+e2, e1+e3, e2+e3 with nonzero square."""
    for x in polarization_candidates(L.field, L.dim):
        if not is_zero(bracket(L, x, x)):
            return x
    raise IsLieAlgebra("every element squares to zero")


def _along(F: Field, v: Vector, g: Vector) -> Scalar:
    """The scalar c with v = c g; raises if v is not on the line."""
    (c,) = coordinates(F, v, [g])
    return c


def null_complement_search(L: Algebra, a1: Vector, a3: Vector):
    """Solve [w + t a1 + s a3, same] = 0 with w the first basis vector outside A.

    Returns (b, rejected) where b is None when no such element exists and
    rejected lists the other roots the quadratic offered.
    """
    F, n = L.field, L.dim
    A = span(F, [a1, a3], n)
    w = complement_vector(A)
    k = leibniz_kernel(L)
    if k.dim != 1:
        raise ClassificationFailed("null-complement search needs a 1-dimensional kernel")
    g = k.basis[0]

    def sym(x, y):
        return _along(F, vadd(F, bracket(L, x, y), bracket(L, y, x)), g)

    q0 = _along(F, bracket(L, w, w), g)
    qt, qs = sym(w, a1), sym(w, a3)
    qtt, qss = _along(F, bracket(L, a1, a1), g), _along(F, bracket(L, a3, a3), g)
    qts = sym(a1, a3)

    def build(t, s):
        return vadd(F, w, vadd(F, vscale(F, t, a1), vscale(F, s, a3)))

    def value(t, s):
        terms = (q0, F.mul(qt, t), F.mul(qs, s), F.mul(qtt, F.mul(t, t)),
                 F.mul(qts, F.mul(t, s)), F.mul(qss, F.mul(s, s)))
        out = F.zero
        for x in terms:
            out = F.add(out, x)
        return out

    if q0 == 0:
        return w, []
    if qss != 0:
        if not F.is_finite:
            raise ClassificationFailed("quadratic in s over Q is outside the closed-form search")
        for t in F.elements():
            for s in F.elements():
                if value(t, s) == 0:
                    return build(t, s), []
        return None, []
    if qs != 0 or qts != 0:
        t = F.zero if qs != 0 else F.one
        lin = F.add(qs, F.mul(qts, t))
        s = F.neg(F.div(value(t, F.zero), lin))
        return build(t, s), []
    if qtt != 0:
        roots = quad_roots(F.div(qt, qtt), F.div(q0, qtt), F)
    elif qt != 0:
        roots = [F.neg(F.div(q0, qt))]
    else:
        roots = []
    if not roots:
        return None, []
    return build(roots[0], F.zero), [build(r, F.zero) for r in roots[1:]]


def find_null_complement(L: Algebra, A: Subspace, a1: Optional[Vector] = None,
                         a3: Optional[Vector] = None) -> Optional[Vector]:
    """An element b outside A with [b, b] = 0, or None."""
    if A.dim >= L.dim:
        raise ValueError("A must be a proper subspace")
    if A.dim < 2:
        return _null_outside_small(L, A)
    if a1 is None or a3 is None:
        if A.dim != 2:
            raise ValueError("pass a1, a3 explicitly unless A is a plane")
        a1, a3 = A.basis
    b, _ = null_complement_search(L, a1, a3)
    return b


def _null_outside_small(L: Algebra, A: Subspace) -> Optional[Vector]:
    """Fallback for lines or the zero space: scan candidates, then the field."""
    F = L.field
    cands = polarization_candidates(F, L.dim)
    for x in cands:
        if not contains(A, x) and is_zero(bracket(L, x, x)):
            return x
    return None


# -- replayable predicates ------------------------------------------------


def _p_is_lie(L):
    return is_lie(L)


def _p_leib_dim(L):
    return leibniz_kernel(L).dim


def _p_leib_central(L):
    return leibniz_kernel(L) <= center(L)


def _p_quotient_abelian(L):
    full = full_space(L.field, L.dim)
    return product_subspace(L, full, full) <= leibniz_kernel(L)


def _p_center_dim(L):
    return center(L).dim


def _p_nilpotent(L):
    return is_nilpotent(L)


def _p_bracket(L, x, y):
    return bracket(L, x, y)


def _p_square_witness(L):
    return find_square_witness(L)


def _p_null(L, a1, a3):
    return null_complement_search(L, a1, a3)[0]


def _p_derived(L):
    full = full_space(L.field, L.dim)
    return product_subspace(L, full, full).basis


def _p_upper(L):
    return tuple(t.basis for t in upper_central_series(L).terms)


def _p_transport(L, P):
    return apply_basis_change(L, P).table


def _p_eigen(L, d, k1, k2):
    return tuple(lam for lam, _ in eigen_lines_2x2(_restricted(L, d, (k1, k2)), L.field))


PREDICATES = {
    "is_lie": (_p_is_lie, "L is a Lie algebra"),
    "leib_dim": (_p_leib_dim, "dim Leib(L)"),
    "leib_central": (_p_leib_central, "Leib(L) ⊆ ζ(L)"),
    "quotient_abelian": (_p_quotient_abelian, "[L,L] ⊆ Leib(L), i.e. L/Leib(L) abelian"),
    "center_dim": (_p_center_dim, "dim ζ(L)"),
    "nilpotent": (_p_nilpotent, "L is nilpotent"),
    "bracket": (_p_bracket, "bracket"),
    "square_witness": (_p_square_witness, "first candidate with nonzero square"),
    "null_complement": (_p_null, "element b ∉ Fa1⊕Fa3 with [b,b]=0"),
    "derived": (_p_derived, "basis of [L,L]"),
    "upper_central": (_p_upper, "upper central series"),
    "eigenvalues": (_p_eigen, "eigenvalues of x ↦ [d,x] on Leib(L)"),
    "transport": (_p_transport, "table of L in the basis a1, a2, a3"),
}


def replay(L: Algebra, rec: DecisionRecord) -> bool:
    fn, _ = PREDICATES[rec.predicate]
    return fn(L, *rec.args) == rec.outcome


class _Run:
    def __init__(self, L: Algebra):
        self.L = L
        self.F = L.field
        self.trace: list[DecisionRecord] = []

    def ask(self, step: str, pred: str, *args, text: str = "", chosen: tuple = ()):
        fn, default_text = PREDICATES[pred]
        out = fn(self.L, *args)
        self.trace.append(DecisionRecord(step, pred, tuple(args), out, text or default_text, chosen))
        return out

    def br(self, step: str, x: Vector, y: Vector, text: str = "") -> Vector:
        return self.ask(step, "bracket", x, y, text=text)

    def fail(self, reason: str):
        raise ClassificationFailed(reason, self.trace)

    def coef(self, v: Vector, g: Vector, what: str) -> Scalar:
        try:
            return _along(self.F, v, g)
        except ValueError:
            self.fail(f"{what} is not a multiple of the expected generator")

    def coords(self, v: Vector, basis, what: str) -> tuple:
        try:
            return coordinates(self.F, v, basis)
        except ValueError:
            self.fail(f"{what} leaves the expected subspace")

    def finish(self, fid: str, params: dict, basis) -> ClassificationResult:
        F = self.F
        P = tuple(tuple(v) for v in basis)
        if det(F, P) == 0:
            self.fail(f"chosen elements for {fid} are linearly dependent")
        try:
            target = table_of(fid, params, F)
        except CatalogError as exc:
            self.fail(f"normalized parameters rejected by {fid}: {exc}")
        moved = self.ask("verify", "transport", P, text=f"table in basis a1,a2,a3 vs {fid}",
                         chosen=(("a1", P[0]), ("a2", P[1]), ("a3", P[2])))
        if moved != target.table:
            self.fail(f"transported table does not match {fid}")
        return ClassificationResult(fid, dict(params), P, tuple(self.trace))


def _restricted(L: Algebra, d: Vector, kb) -> Matrix:
    """Matrix of x -> [d, x] on span(kb), columns are images of kb."""
    F = L.field
    cols = [coordinates(F, bracket(L, d, k), kb) for k in kb]
    return tuple(tuple(cols[j][i] for j in range(len(kb))) for i in range(len(kb)))


# -- the case procedures ----------------------------------------------------


def _case_central_abelian(run: _Run):
    F, L = run.F, run.L
    a1 = run.ask("a1", "square_witness")
    a3 = run.br("a3", a1, a1, "a3 = [a1,a1]")
    if run.ask("center", "center_dim") == 2:
        Z = center(L)
        a2 = next(v for v in Z.basis if not contains(span(F, [a3], 3), v))
        return "Lei3(3)", {}, (a1, a2, a3)
    b = run.ask("b", "null_complement", a1, a3)
    if b is not None:
        gamma = run.coef(run.br("gamma", b, a1, "[b,a1] = γa3"), a3, "[b,a1]")
        alpha = run.coef(run.br("alpha", a1, b, "[a1,b] = αa3"), a3, "[a1,b]")
        if gamma == 0:
            if alpha == 0:
                run.fail("b would be central, contradicting dim ζ(L) = 1")
            return "Lei4(3)", {}, (a1, vscale(F, F.inv(alpha), b), a3)
        a2 = vscale(F, F.inv(gamma), b)
        alpha = F.div(alpha, gamma)
        if alpha == 0:
            return "Lei5(3)", {}, (a1, a2, a3)
        return "Lei6(3)", {"alpha": alpha}, (a1, a2, a3)
    b = complement_vector(span(F, [a1, a3], 3))
    beta = run.coef(run.br("beta", b, b, "[b,b] = βa3"), a3, "[b,b]")
    gamma = run.coef(run.br("gamma", b, a1, "[b,a1] = γa3"), a3, "[b,a1]")
    alpha = run.coef(run.br("alpha", a1, b, "[a1,b] = αa3"), a3, "[a1,b]")
    if gamma == 0 and alpha == 0:
        return "Lei7(3)", {"beta": beta}, (a1, b, a3)
    if gamma == 0:
        return "Lei8(3)", {"alpha": alpha, "beta": beta}, (a1, b, a3)
    a2 = vscale(F, F.inv(gamma), b)
    sigma = F.div(beta, F.mul(gamma, gamma))
    if alpha == 0:
        return "Lei9(3)", {"sigma": sigma}, (a1, a2, a3)
    return "Lei10(3)", {"sigma": sigma, "tau": F.div(alpha, gamma)}, (a1, a2, a3)


def _pick_outside(F: Field, basis, S: Subspace) -> Vector:
    return next(v for v in basis if not contains(S, v))


def _case_central_nonabelian(run: _Run):
    F, L = run.F, run.L
    k = leibniz_kernel(L)
    C = span(F, run.ask("C", "derived"), 3)
    c = _pick_outside(F, C.basis, k)
    cc = run.br("c", c, c, "[c,c] for c ∈ [L,L] \\ Leib(L)")
    if not is_zero(cc):
        if F.char != 2:
            run.fail("[c,c]≠0 here forces 2[a1,a1]=0, impossible when char(F)≠2")
        a1, a3 = c, cc
        b = run.ask("b", "null_complement", a1, a3)
        found = b is not None
        if not found:
            b = complement_vector(span(F, [a1, a3], 3))
        kappa, rho = run.coords(run.br("kappa", b, a1, "[b,a1] = κa1 + ρa3"), (a1, a3), "[b,a1]")
        if kappa == 0:
            run.fail("[b,a1] has no a1 component although L/Leib(L) is non-abelian")
        b = vscale(F, F.inv(kappa), b)
        alpha = F.div(rho, kappa)
        if found:
            if alpha == 0:
                return "Lei11(3)", {}, (a1, b, a3)
            return "Lei12(3)", {"alpha": alpha}, (a1, b, a3)
        gamma = run.coef(run.br("gamma", b, b, "[b,b] = γa3"), a3, "[b,b]")
        if alpha == 0:
            return "Lei13(3)", {"gamma": gamma}, (a1, b, a3)
        return "Lei14(3)", {"alpha": alpha, "gamma": gamma}, (a1, b, a3)
    g = k.basis[0]
    w = complement_vector(C)
    kappa, _ = run.coords(run.br("kappa", w, c, "[w,c] = κc + ρg"), (c, g), "[w,c]")
    if kappa == 0:
        run.fail("[w,c] ∈ Leib(L) although L/Leib(L) is non-abelian")
    b = vscale(F, F.inv(kappa), w)
    a3 = run.br("a3", b, b, "a3 = [b,b]")
    if is_zero(a3):
        run.fail("[b,b]=0 would make [b,c]+[c,b] vanish on a non-Lie algebra")
    bc = run.br("alpha", b, c, "[b,c] = c + αa3")
    alpha = run.coef(vsub(F, bc, c), a3, "[b,c] - c")
    if alpha == 0:
        return "Lei15(3)", {}, (b, c, a3)
    return "Lei16(3)", {"alpha": alpha}, (b, c, a3)


def _case_noncentral_abelian(run: _Run):
    F, L = run.F, run.L
    a1 = run.ask("a1", "square_witness")
    a3 = run.br("a3", a1, a1, "a3 = [a1,a1]")
    rho = run.coef(run.br("rho", a1, a3, "[a1,a3] = ρa3"), a3, "[a1,a3]")
    if rho == 0:
        run.fail("Fa1⊕Fa3 nilpotent would make Leib(L) central")
    a1 = vscale(F, F.inv(rho), a1)
    a3 = run.br("a3", a1, a1, "rescaled so that [a1,a3] = a3")
    if run.ask("center", "center_dim") > 0:
        a2 = center(L).basis[0]
        return "Lei17(3)", {}, (a1, a2, a3)
    b = run.ask("b", "null_complement", a1, a3)
    if b is not None:
        lam = run.coef(run.br("lambda", b, a1, "[b,a1] = λa3"), a3, "[b,a1]")
        mu = run.coef(run.br("mu", a1, b, "[a1,b] = μa3"), a3, "[a1,b]")
        if lam == 0 and mu != 0:
            return "Lei18(3)", {}, (a1, vscale(F, F.inv(mu), b), a3)
        if mu == 0 and lam != 0:
            return "Lei19(3)", {}, (a1, vscale(F, F.inv(lam), b), a3)
        run.fail("null complement with λμ≠0 or λ=μ=0 contradicts ζ(L)=0")
    b = complement_vector(span(F, [a1, a3], 3))
    sigma = run.coef(run.br("sigma", b, b, "[b,b] = σa3"), a3, "[b,b]")
    lam = run.coef(run.br("lambda", b, a1, "[b,a1] = λa3"), a3, "[b,a1]")
    mu = run.coef(run.br("mu", a1, b, "[a1,b] = μa3"), a3, "[a1,b]")
    if lam == 0 and mu == 0:
        return "Lei20(3)", {"sigma": sigma}, (a1, b, a3)
    if lam == 0:
        return "Lei21(3)", {"tau": F.div(sigma, F.mul(mu, mu))}, (a1, vscale(F, F.inv(mu), b), a3)
    a2 = vscale(F, F.inv(lam), b)
    tau = F.div(sigma, F.mul(lam, lam))
    if mu == 0:
        return "Lei22(3)", {"tau": tau}, (a1, a2, a3)
    return "Lei23(3)", {"delta": F.div(mu, lam), "tau": tau}, (a1, a2, a3)


def _case_noncentral_nonabelian(run: _Run):
    F, L = run.F, run.L
    k = leibniz_kernel(L)
    C = span(F, run.ask("C", "derived"), 3)
    c = _pick_outside(F, C.basis, k)
    cc = run.br("c", c, c, "[c,c] for c ∈ [L,L] \\ Leib(L)")
    if not is_zero(cc):
        a1, a3 = c, cc
        rho = run.coef(run.br("rho", a1, a3, "[a1,a3] = ρa3"), a3, "[a1,a3]")
        if rho != 0:
            # left multiplication by a1 is a derivation: [a1,[b,a3]] expands to
            # put [a1,b] in Fa3, while [a1,b]+[b,a1] ∈ Leib(L) forces [b,a1] ∈ Fa3
            run.fail("Fa1⊕Fa3 non-nilpotent with [a1,a1]≠0 contradicts L/Leib(L) non-abelian")
        if F.char == 2:
            run.fail("Fa1⊕Fa3 nilpotent requires char(F)≠2")
        b = run.ask("b", "null_complement", a1, a3)
        found = b is not None
        if not found:
            b = complement_vector(span(F, [a1, a3], 3))
        kappa, r = run.coords(run.br("kappa", b, a1, "[b,a1] = κa1 + ρa3"), (a1, a3), "[b,a1]")
        if kappa == 0:
            run.fail("[b,a1] ∈ Leib(L) although L/Leib(L) is non-abelian")
        b = vscale(F, F.inv(kappa), b)
        alpha = F.div(r, kappa)
        if found:
            if alpha == 0:
                return "Lei24(3)", {}, (a1, b, a3)
            return "Lei25(3)", {"alpha": alpha}, (a1, b, a3)
        gamma = run.coef(run.br("gamma", b, b, "[b,b] = γa3"), a3, "[b,b]")
        if alpha == 0:
            return "Lei28(3)", {"gamma": gamma}, (a1, b, a3)
        return "Lei29(3)", {"alpha": alpha, "gamma": gamma}, (a1, b, a3)
    a3 = k.basis[0]
    w = complement_vector(C)
    eta = run.coef(run.br("eta", w, a3, "[w,a3] = ηa3"), a3, "[w,a3]")
    if eta == 0:
        run.fail("[w,a3]=0 would make Leib(L) central")
    b = vscale(F, F.inv(eta), w)
    if is_zero(run.br("b", b, b, "[b,b]")):
        b = vadd(F, b, a3)
    gamma = run.coef(run.br("gamma", b, b, "[b,b] = γa3"), a3, "[b,b]")
    kappa, alpha = run.coords(run.br("kappa", b, c, "[b,c] = κc + αa3"), (c, a3), "[b,c]")
    if kappa != 1:
        run.fail(f"[b,c] = κc + αa3 with κ = {F.format(kappa)} ≠ 1 while [b,a3] = a3; "
                 "no catalog type has this normal form")
    if alpha != 0:
        run.fail("[b,c] = c + αa3 with α≠0 contradicts [c,a3] = 0")
    m, beta = run.coords(run.br("beta", c, b, "[c,b] = -c + βa3"), (c, a3), "[c,b]")
    if m != F.neg(F.one):
        run.fail("[c,b] + [b,c] leaves Leib(L)")
    if beta == 0:
        return "Lei35(3)", {"gamma": gamma}, (b, c, a3)
    return "Lei36(3)", {"beta": beta, "gamma": gamma}, (b, c, a3)


def _case_nilpotent(run: _Run):
    F = run.F
    terms = run.ask("series", "upper_central")
    if len(terms) < 4 or len(terms[3]) != 3:
        run.fail("upper central series does not have length 3")
    a1 = complement_vector(Subspace(F, 3, terms[2]))
    a2 = run.br("a2", a1, a1, "a2 = [a1,a1]")
    a3 = run.br("a3", a1, a2, "a3 = [a1,a2]")
    return "Lei37(3)", {}, (a1, a2, a3)


def _case_center(run: _Run):
    F, L = run.F, run.L
    k = leibniz_kernel(L)
    Z = center(L)
    if Z.dim != 1 or not Z <= k:
        run.fail("center is not a line inside Leib(L)")
    z = Z.basis[0]
    kb = _pick_outside(F, k.basis, Z)
    d = complement_vector(k)
    rho, _ = run.coords(run.br("rho", d, kb, "[d,k] = ρk + (…)z"), (kb, z), "[d,k]")
    if rho == 0:
        run.fail("L/ζ(L) would be nilpotent")
    d = vscale(F, F.inv(rho), d)
    q, _ = run.coords(run.br("q", d, d, "[d,d] mod ζ(L)"), (kb, z), "[d,d]")
    if q == 0:
        d = vadd(F, d, kb)
    b = run.br("b", d, d, "b = [d,d]")
    alpha = run.coef(vsub(F, run.br("alpha", d, b, "[d,b] = b + αz"), b), z, "[d,b] - b")
    if alpha == 0:
        run.fail("[d,b] = b would make L non-cyclic with zero kernel part")
    return "Lei38(3)", {}, (d, b, vscale(F, alpha, z))


def _case_zero_center(run: _Run):
    F, L = run.F, run.L
    k = leibniz_kernel(L)
    kb = k.basis
    d0 = complement_vector(k)
    M = _restricted(L, d0, kb)
    run.ask("eigen", "eigenvalues", d0, kb[0], kb[1])
    sq0 = bracket(L, d0, d0)
    lines = []
    for lam, E in eigen_lines_2x2(M, F):
        for v in E.basis:
            lines.append((lam, vcomb(F, v, kb, 3)))
    # a line avoiding [d,d] lets d itself serve as a1
    lines.sort(key=lambda lc: contains(span(F, [lc[1]], 3), sq0))
    if not lines:
        d = d0
        if is_zero(run.br("d", d, d, "[d,d]")):
            d = vadd(F, d0, kb[0])
        b = run.br("b", d, d, "b = [d,d]")
        c = run.br("c", d, b, "c = [d,b]")
        beta, gamma = run.coords(run.br("beta", d, c, "[d,c] = βb + γc"), (b, c), "[d,c]")
        return "Lei42(3)", {"beta": beta, "gamma": gamma}, (d, b, c)
    lam, c = lines[0]
    tr = F.add(M[0][0], M[1][1])
    mu_q = F.sub(tr, lam)
    K = span(F, [c], 3)
    kbar = _pick_outside(F, kb, K)
    if mu_q != 0:
        d = vscale(F, F.inv(mu_q), d0)
        q, _ = run.coords(run.br("q", d, d, "[d,d] mod K"), (kbar, c), "[d,d]")
        if q == 0:
            d = vadd(F, d, kbar)
        b = run.br("b", d, d, "b = [d,d]")
        beta = run.coef(run.br("beta", d, c, "[d,c] = βc"), c, "[d,c]")
        alpha = run.coef(vsub(F, run.br("alpha", d, b, "[d,b] = b + αc"), b), c, "[d,b] - b")
        if alpha == 0:
            return "Lei39(3)", {"beta": beta}, (d, b, c)
        a3 = vscale(F, beta, c)
        return "Lei40(3)", {"beta": beta, "gamma": F.div(alpha, beta)}, (d, b, a3)
    if lam == 0:
        run.fail("an eigenvalue 0 on Leib(L) gives a central element, contradicting ζ(L)=0")
    b = run.br("b", d0, d0, "b = [d,d]")
    if contains(K, b):
        run.fail("[d,d] ∈ K although L/K is not a Lie algebra")
    alpha = run.coef(run.br("alpha", d0, b, "[d,b] = αc"), c, "[d,b]")
    a1 = vscale(F, F.inv(lam), d0)
    a2 = vscale(F, F.inv(F.mul(lam, lam)), b)
    return "Lei41(3)", {"gamma": F.div(alpha, F.power(lam, 3))}, (a1, a2, c)


def classify(L: Algebra) -> ClassificationResult:
    if L.dim != 3:
        raise NotDimensionThree(f"dimension {L.dim}, expected 3")
    bad = check_leibniz(L)
    if bad is not None:
        raise NotLeibniz(bad)
    run = _Run(L)
    if run.ask("start", "is_lie"):
        raise IsLieAlgebra("L is a Lie algebra")
    dk = run.ask("kernel", "leib_dim")
    if dk == 1:
        central = run.ask("split", "leib_central")
        abelian = run.ask("split", "quotient_abelian")
        proc = {
            (True, True): _case_central_abelian,
            (True, False): _case_central_nonabelian,
            (False, True): _case_noncentral_abelian,
            (False, False): _case_noncentral_nonabelian,
        }[(central, abelian)]
    elif dk == 2:
        if run.ask("split", "nilpotent"):
            proc = _case_nilpotent
        elif run.ask("split", "center_dim") > 0:
            proc = _case_center
        else:
            proc = _case_zero_center
    else:
        run.fail(f"dim Leib(L) = {dk} is impossible for a 3-dimensional Leibniz algebra")
    fid, params, basis = proc(run)
    return run.finish(fid, params, basis)

"""Operator-identity battery for one (algebra, omega) fixture.

Each identity is verified on the full blade basis of every degree (which is
the same as the corresponding operator-matrix identity), or on the primitive
bases where an identity only holds there.  All arithmetic is exact; a failing
identity reports the first counterexample form.
"""

from __future__ import annotations

from fractions import Fraction

from .exterior import Form, blades
from .reports import CheckResult
from .symplectic import SymplecticComplex, _factorial


def _all_blade_forms(dim: int):
    for k in range(dim + 1):
        for m in blades(dim, k):
            yield k, Form(dim, {m: 1})


def _check_on_blades(name: str, dim: int, lhs, rhs, details: list[str]) -> bool:
    for _k, f in _all_blade_forms(dim):
        a, b = lhs(f), rhs(f)
        if a != b:
            details.append(f"{name}: first counterexample {f}: {a} != {b}")
            return False
    return True


def _scale_by_degree(a: Form, fn) -> Form:
    out = Form.zero(a.dim)
    for k in a.degrees():
        out = out + a.grade(k) * Fraction(fn(k))
    return out


def run_identity_suite(cx: SymplecticComplex) -> CheckResult:
    st = cx.structure
    dim, n = cx.dim, cx.n
    details: list[str] = []
    ok = True

    def check(name, lhs, rhs):
        nonlocal ok
        if not _check_on_blades(name, dim, lhs, rhs, details):
            ok = False

    L, Lam, H = st.L, st.Lambda, st.H
    dp, dm, dpdm = cx.del_plus, cx.del_minus, cx.del_plus_del_minus

    # sl(2) commutators
    check("[Lambda,L] = H", lambda f: Lam(L(f)) - L(Lam(f)), H)
    check("[H,Lambda] = 2 Lambda", lambda f: H(Lam(f)) - Lam(H(f)), lambda f: Lam(f) * 2)
    check("[H,L] = -2 L", lambda f: H(L(f)) - L(H(f)), lambda f: L(f) * (-2))

    # powers of L against Lambda, and the two mixed products
    for r in range(1, n + 1):
        check(f"[Lambda,L^{r}] = {r} (H+{r}-1) L^{r - 1}",
              lambda f, r=r: Lam(st.L_power(f, r)) - st.L_power(Lam(f), r),
              lambda f, r=r: _scale_by_degree(
                  st.L_power(f, r - 1), lambda k, r=r: r * (n - k + r - 1)))
    check("L Lambda = (H+R+1) R",
          lambda f: L(Lam(f)),
          lambda f: st.apply_rs(f, lambda r, s: Fraction(r * (n - r - s + 1))))
    check("Lambda L = (H+R) (R+1)",
          lambda f: Lam(L(f)),
          lambda f: st.apply_rs(f, lambda r, s: Fraction((n - r - s) * (r + 1))))

    # the splitting of d
    check("d = del_plus + L del_minus",
          cx.d, lambda f: dp(f) + L(dm(f)))
    check("del_plus^2 = 0", lambda f: dp(dp(f)), lambda f: Form.zero(dim))
    check("del_minus^2 = 0", lambda f: dm(dm(f)), lambda f: Form.zero(dim))
    check("L del_plus del_minus = -L del_minus del_plus",
          lambda f: L(dp(dm(f))), lambda f: -L(dm(dp(f))))
    check("[del_plus, L] = 0", lambda f: dp(L(f)), lambda f: L(dp(f)))
    check("[L del_minus, L] = 0",
          lambda f: L(dm(L(f))), lambda f: L(L(dm(f))))

    # adjoint differential: decomposition and second-order relation
    check("d_lambda = (H+R+1)^{-1} del_plus Lambda - (H+R) del_minus",
          cx.d_lambda,
          lambda f: st.apply_rs(dp(Lam(f)), lambda r, s: Fraction(1, n - r - s + 1))
          - st.apply_rs(dm(f), lambda r, s: Fraction(n - r - s)))
    check("d d_lambda = -(H+2R+1) del_plus del_minus",
          lambda f: cx.d(cx.d_lambda(f)),
          lambda f: -st.apply_rs(dpdm(f), lambda r, s: Fraction(n - s + 1)))

    # two independent routes must agree everywhere
    check("d_lambda two routes", cx.d_lambda, cx.d_lambda_via_star)
    check("del_plus two routes", dp, cx.del_plus_formula)
    check("del_minus two routes", dm, cx.del_minus_formula)

    # symplectic star: involution
    check("star star = 1", lambda f: st.star(st.star(f)), lambda f: f)

    # star on each omega-power of a primitive form reflects the power
    for s in range(n + 1):
        for b in st.primitive_basis(s):
            for r in range(n - s + 1):
                lhs = st.star(st.L_power(b, r) / _factorial(r))
                p = n - r - s
                rhs = st.L_power(b, p) * Fraction((-1) ** (s * (s + 1) // 2), _factorial(p))
                if lhs != rhs:
                    ok = False
                    details.append(
                        f"star reflection fails at (r={r}, s={s}): {b}")
                    break

    # simplified expressions on primitive forms
    for s in range(n + 1):
        for b in st.primitive_basis(s):
            if dm(b) != cx.del_minus_primitive(b):
                ok = False
                details.append(f"del_minus != (1/H) Lambda d on {b}")
            if dp(b) != cx.del_plus_primitive(b):
                ok = False
                details.append(f"del_plus != d - L(1/H) Lambda d on {b}")
            dld = cx.d(Lam(cx.d(b)))
            via = _scale_by_degree(dld, lambda k: Fraction(1, n - k + 1))
            if dpdm(b) != via:
                ok = False
                details.append(f"del_plus del_minus != (1/(H+1)) d Lambda d on {b}")
            if cx.d_lambda(b) != _scale_by_degree(dm(b), lambda k: -(n - k)):
                ok = False
                details.append(f"d_lambda != -H del_minus on {b}")

    return CheckResult("operator-identities", ok, details)

"""Symplectic linear algebra on invariant forms.

``SymplecticStructure`` wraps a non-degenerate 2-form: the sl(2) triple
(L, Lambda, H), the component-count operator R, the Lefschetz decomposition
into primitive pieces, primitive-form tests and bases, and the symplectic
star.  ``SymplecticComplex`` combines it with a Lie-algebra differential and
carries d, its symplectic adjoint, and the degree +1/-1 pieces of d on
primitive components.

Every operator here acts on exact Forms and returns exact Forms.  Scalar
operators such as 1/(H+2R+1) act by eigenvalue on each Lefschetz component:
a component built from r copies of omega wedged onto a primitive s-form is
scaled by the value of the symbol at that (r, s).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial as _factorial
from typing import Callable

from .cealgebra import LieAlgebraSpec
from .exterior import Form, blades, contract, form_to_coords
from .linalg import OperatorMatrix, Subspace, det, kernel

RS = Callable[[int, int], Fraction]


class NotSymplecticError(ValueError):
    """The given 2-form is not symplectic; ``reason`` says why."""

    def __init__(self, message: str, reason: str):
        super().__init__(message)
        self.reason = reason  # "not_2form" | "degenerate" | "not_closed"


class LefschetzComponents:
    """Primitive components of a homogeneous form.

    ``components[r]`` is the primitive (k-2r)-form whose r-fold omega wedge
    (divided by r!) contributes to the form; reconstruction is exact and is
    checked at construction, as is primitivity of every component.
    """

    __slots__ = ("structure", "degree", "components")

    def __init__(self, structure: "SymplecticStructure", degree: int,
                 components: dict[int, Form], original: Form):
        self.structure = structure
        self.degree = degree
        self.components = components
        for r, b in components.items():
            if structure.Lambda(b):
                raise AssertionError(f"component r={r} is not primitive: {b}")
        if self.reconstruct() != original:
            raise AssertionError("Lefschetz reconstruction does not match input")

    def reconstruct(self) -> Form:
        out = Form.zero(self.structure.dim)
        for r, b in self.components.items():
            out = out + self.structure.L_power(b, r) / _factorial(r)
        return out




class SymplecticStructure:
    """A non-degenerate 2-form with its inverse bivector and sl(2) action.

    Closedness is not checked here (that needs a differential); see
    ``SymplecticComplex``.
    """

    def __init__(self, omega: Form):
        if omega.is_zero() or omega.degrees() != {2}:
            raise NotSymplecticError(
                f"omega must be a non-zero 2-form, got {omega}", "not_2form")
        self.omega = omega
        self.dim = omega.dim
        if self.dim % 2:
            raise NotSymplecticError("ambient dimension must be even", "not_2form")
        self.n = self.dim // 2
        w = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for mask, c in omega.items():
            i, j = [b + 1 for b in range(mask.bit_length()) if mask >> b & 1]
            w[i - 1][j - 1] = c
            w[j - 1][i - 1] = -c
        self.matrix = w
        if det(w, self.dim) == 0:
            raise NotSymplecticError(
                f"omega is degenerate (det of its coefficient matrix is 0): {omega}",
                "degenerate")
        winv = OperatorMatrix.from_rows(
            [{j: w[i][j] for j in range(self.dim) if w[i][j]} for i in range(self.dim)],
            self.dim).invert()
        self.inverse = [[winv.entry(i, j) for j in range(self.dim)] for i in range(self.dim)]
        # sanity: (omega^-1) omega = identity
        for i in range(self.dim):
            for j in range(self.dim):
                acc = sum(self.inverse[i][t] * w[t][j] for t in range(self.dim))
                if acc != (1 if i == j else 0):
                    raise AssertionError("inverse bivector check failed")
        self._inv_pairs = [(i, j, self.inverse[i][j])
                           for i in range(self.dim) for j in range(i + 1, self.dim)
                           if self.inverse[i][j]]
        if not self.L_power(Form.scalar(self.dim, 1), self.n):
            raise NotSymplecticError("omega^n vanishes", "degenerate")
        self._primitive: dict[int, tuple[Subspace, list[Form]]] = {}

    # -- sl(2) action ----------------------------------------------------

    def L(self, a: Form) -> Form:
        """Wedge with omega."""
        return self.omega.wedge(a)

    def L_power(self, a: Form, r: int) -> Form:
        for _ in range(r):
            a = self.omega.wedge(a)
        return a

    def Lambda(self, a: Form) -> Form:
        """Contraction with the inverse bivector (degree -2)."""
        out = Form.zero(a.dim)
        for i, j, c in self._inv_pairs:
            out = out + contract(i + 1, contract(j + 1, a)) * c
        return out

    def Lambda_power(self, a: Form, r: int) -> Form:
        for _ in range(r):
            a = self.Lambda(a)
        return a

    def H(self, a: Form) -> Form:
        """Grading operator: multiplies the degree-k part by n-k."""
        out = Form.zero(a.dim)
        for k in a.degrees():
            out = out + a.grade(k) * (self.n - k)
        return out

    # -- Lefschetz decomposition ------------------------------------------

    def _decompose_degree(self, a: Form, k: int) -> dict[int, Form]:
        """Primitive components of a homogeneous degree-k form (closed formula)."""
        comps: dict[int, Form] = {}
        if a.is_zero():
            return comps
        max_pow = k // 2
        lam_pows = [a]
        for _ in range(max_pow):
            lam_pows.append(self.Lambda(lam_pows[-1]))
        for r in range(max(k - self.n, 0), max_pow + 1):
            m = self.n - k + 2 * r + 1
            denom_r = 1
            for i in range(r + 1):
                denom_r *= m - i
            b = Form.zero(self.dim)
            denom_l = 1
            for l in range(max_pow - r + 1):
                denom_l *= m + l
                coeff = Fraction((-1) ** l * m * m, denom_r * denom_l * _factorial(l))
                term = lam_pows[r + l]
                if term:
                    b = b + self.L_power(term, l) * coeff
            if b:
                comps[r] = b
        return comps

    def lefschetz_decompose(self, a: Form, k: int | None = None) -> LefschetzComponents:
        if a.is_zero():
            return LefschetzComponents(self, k if k is not None else 0, {}, a)
        if not a.is_homogeneous():
            raise ValueError(f"form is not homogeneous: {a}")
        deg = a.degree()
        if k is not None and k != deg:
            raise ValueError(f"form has degree {deg}, not {k}")
        return LefschetzComponents(self, deg, self._decompose_degree(a, deg), a)

    def components(self, a: Form) -> dict[tuple[int, int], Form]:
        """Primitive components of an arbitrary form, keyed by (r, s)."""
        out = {}
        for k in a.degrees():
            for r, b in self._decompose_degree(a.grade(k), k).items():
                out[(r, k - 2 * r)] = b
        return out

    def assemble(self, components: dict[tuple[int, int], Form]) -> Form:
        out = Form.zero(self.dim)
        for (r, _s), b in components.items():
            out = out + self.L_power(b, r) / _factorial(r)
        return out

    def apply_rs(self, a: Form, fn: RS) -> Form:
        """Scale each (r, s) Lefschetz component by fn(r, s) and reassemble."""
        out = Form.zero(self.dim)
        for (r, s), b in self.components(a).items():
            out = out + self.L_power(b, r) * (Fraction(fn(r, s)) / _factorial(r))
        return out

    def R(self, a: Form) -> Form:
        """Reads off the omega-power of each Lefschetz component."""
        return self.apply_rs(a, lambda r, s: Fraction(r))

    # -- primitive forms ---------------------------------------------------

    def is_primitive(self, a: Form) -> bool:
        return self.Lambda(a).is_zero()

    def _primitive_data(self, k: int) -> tuple[Subspace, list[Form]]:
        cached = self._primitive.get(k)
        if cached is not None:
            return cached
        if not 0 <= k <= self.n:
            raise ValueError(f"primitive degree must be in 0..{self.n}, got {k}")
        order = blades(self.dim, k)
        index = {m: i for i, m in enumerate(order)}
        cod = blades(self.dim, k - 2)
        cod_index = {m: i for i, m in enumerate(cod)}
        cols = [form_to_coords(self.Lambda(Form(self.dim, {m: 1})), cod_index)
                for m in order]
        sub = kernel(OperatorMatrix.from_columns(cols, len(cod)))
        forms = [Form(self.dim, {order[j]: c for j, c in row.items()})
                 for row in sub.rows]
        data = (sub, forms)
        self._primitive[k] = data
        return data

    def primitive_basis(self, k: int) -> list[Form]:
        """Canonical basis of the primitive degree-k forms (kernel of Lambda)."""
        return list(self._primitive_data(k)[1])

    def primitive_subspace(self, k: int) -> Subspace:
        """Primitive forms as a subspace over the degree-k blade basis."""
        return self._primitive_data(k)[0]

    # -- symplectic star ----------------------------------------------------

    def star(self, a: Form) -> Form:
        """Symplectic star: reflects Lefschetz components across the middle."""
        out = Form.zero(self.dim)
        for (r, s), b in self.components(a).items():
            sign = (-1) ** (s * (s + 1) // 2)
            p = self.n - r - s
            out = out + self.L_power(b, p) * Fraction(sign, _factorial(p))
        return out

    def volume(self) -> Form:
        """omega^n / n!."""
        return self.L_power(Form.scalar(self.dim, 1), self.n) / _factorial(self.n)


def standard_omega(n: int) -> Form:
    """e_{12} + e_{34} + ... + e_{2n-1,2n}."""
    out = Form.zero(2 * n)
    for j in range(n):
        out = out + Form.e(2 * n, 2 * j + 1, 2 * j + 2)
    return out


def parse_omega(text: str, dim: int) -> Form:
    """Symplectic-form input: the full form grammar, or the two-index
    shorthand ``16+25-34`` (index pairs with optional integer coefficients)."""
    from .cealgebra import _parse_structure_entry
    from .exterior import parse_form
    if "e" in text:
        return parse_form(text, dim)
    return _parse_structure_entry(text, dim, text, 0)


# ---------------------------------------------------------------------------
# recursive primitive basis for the standard structure
# ---------------------------------------------------------------------------

def recursive_primitive_basis(k: int, n: int) -> list[Form]:
    """Primitive-form basis for the standard omega, built by peeling off the
    first symplectic plane and recursing on dimension 2(n-1).

    Branches, in order: e_1 ^ (degree k-1 basis), e_2 ^ (degree k-1 basis),
    the corrected plane form (e_12 - omega_rest/(n-k+1)) ^ (degree k-2 basis),
    and the degree-k basis untouched by the first plane.
    """
    if n < 1:
        raise ValueError("half-dimension must be at least 1")
    if k < 0 or k > n:
        return []
    dim = 2 * n
    if k == 0:
        return [Form.scalar(dim, 1)]
    if n == 1:
        return [Form.e(dim, 1), Form.e(dim, 2)]

    def shift(b: Form) -> Form:
        return Form(dim, {m << 2: c for m, c in b.items()})

    e1, e2, e12 = Form.e(dim, 1), Form.e(dim, 2), Form.e(dim, 1, 2)
    omega_rest = Form.zero(dim)
    for j in range(2, n + 1):
        omega_rest = omega_rest + Form.e(dim, 2 * j - 1, 2 * j)
    out: list[Form] = []
    for b in recursive_primitive_basis(k - 1, n - 1):
        out.append(e1.wedge(shift(b)))
    for b in recursive_primitive_basis(k - 1, n - 1):
        out.append(e2.wedge(shift(b)))
    if k >= 2:
        corrector = e12 - omega_rest * Fraction(1, n - k + 1)
        for b in recursive_primitive_basis(k - 2, n - 1):
            out.append(corrector.wedge(shift(b)))
    for b in recursive_primitive_basis(k, n - 1):
        out.append(shift(b))
    return out


# ---------------------------------------------------------------------------
# the differential pair
# ---------------------------------------------------------------------------

class SymplecticComplex:
    """A unimodular Lie-algebra differential together with a symplectic form.

    Provides d, the symplectic adjoint differential, and the two primitive
    pieces of d.  The degree +1/-1 pieces are defined by projection: apply d
    to each primitive Lefschetz component and split the result into its
    primitive part and its single omega-wedge part.  Closed-formula versions
    in terms of d and the adjoint differential are provided separately and
    must agree (they are cross-checked in the test suite).
    """

    def __init__(self, algebra: LieAlgebraSpec, omega: Form):
        if algebra.dim != omega.dim:
            raise ValueError(
                f"algebra dimension {algebra.dim} != omega dimension {omega.dim}")
        self.algebra = algebra
        self.structure = SymplecticStructure(omega)
        d_omega = algebra.d(omega)
        if d_omega:
            raise NotSymplecticError(
                f"omega is not closed: d(omega) = {d_omega}", "not_closed")
        self.omega = omega
        self.dim = algebra.dim
        self.n = self.structure.n

    # convenience passthroughs
    def d(self, a: Form) -> Form:
        return self.algebra.d(a)

    def L(self, a: Form) -> Form:
        return self.structure.L(a)

    def Lambda(self, a: Form) -> Form:
        return self.structure.Lambda(a)

    def H(self, a: Form) -> Form:
        return self.structure.H(a)

    def primitive_basis(self, k: int) -> list[Form]:
        return self.structure.primitive_basis(k)

    def star(self, a: Form) -> Form:
        return self.structure.star(a)

    def integrate(self, a: Form):
        return self.algebra.integrate(a)

    # -- the adjoint differential -----------------------------------------

    def d_lambda(self, a: Form) -> Form:
        """d Lambda - Lambda d."""
        return self.d(self.Lambda(a)) - self.Lambda(self.d(a))

    def d_lambda_via_star(self, a: Form) -> Form:
        """(-1)^(k+1) star d star, degree by degree."""
        out = Form.zero(self.dim)
        st = self.structure
        for k in a.degrees():
            piece = st.star(self.d(st.star(a.grade(k))))
            out = out + piece * ((-1) ** (k + 1))
        return out

    # -- primitive pieces of d ----------------------------------------------

    def _split_d_primitive(self, b: Form, s: int) -> tuple[Form, Form]:
        """d(B_s) = B0_{s+1} + omega ^ B1_{s-1} for primitive B_s."""
        db = self.d(b)
        if db.is_zero():
            z = Form.zero(self.dim)
            return z, z
        comps = self.structure._decompose_degree(db, s + 1)
        if any(r > 1 for r in comps):
            raise AssertionError(
                f"d of a primitive form has components beyond one omega wedge: {b}")
        z = Form.zero(self.dim)
        return comps.get(0, z), comps.get(1, z)

    def del_plus(self, a: Form) -> Form:
        """Degree +1 piece of d: keeps the primitive part of d on each
        Lefschetz component."""
        st = self.structure
        out = Form.zero(self.dim)
        for (r, s), b in st.components(a).items():
            b0, _b1 = self._split_d_primitive(b, s)
            if b0:
                out = out + st.L_power(b0, r) / _factorial(r)
        return out

    def del_minus(self, a: Form) -> Form:
        """Degree -1 piece of d: keeps the omega-wedge part of d on each
        Lefschetz component."""
        st = self.structure
        out = Form.zero(self.dim)
        for (r, s), b in st.components(a).items():
            _b0, b1 = self._split_d_primitive(b, s)
            if b1:
                out = out + st.L_power(b1, r) / _factorial(r)
        return out

    def del_plus_del_minus(self, a: Form) -> Form:
        return self.del_plus(self.del_minus(a))

    # -- closed-formula routes (cross-checks) --------------------------------

    def del_plus_formula(self, a: Form) -> Form:
        """(H+2R+1)^{-1} [ (H+R+1) d + L d_Lambda ], eigenvalues per component."""
        st = self.structure
        n = self.n
        operand = st.apply_rs(self.d(a), lambda r, s: Fraction(n - r - s + 1)) \
            + st.L(self.d_lambda(a))
        return st.apply_rs(operand, lambda r, s: Fraction(1, n - s + 1))

    def del_minus_formula(self, a: Form) -> Form:
        """-[(H+2R+1)(H+R)]^{-1} [ (H+R) d_Lambda - Lambda d ].

        The outer eigenvalue inverse divides by n-r-s, which vanishes on
        boundary components; those cancel exactly in the operand, so a
        ZeroDivisionError here means an operator bug, not bad input.
        """
        st = self.structure
        n = self.n
        operand = st.apply_rs(self.d_lambda(a), lambda r, s: Fraction(n - r - s)) \
            - self.Lambda(self.d(a))
        return st.apply_rs(
            operand, lambda r, s: Fraction(-1, (n - s + 1) * (n - r - s)))

    # primitive-only simplifications
    def del_minus_primitive(self, b: Form) -> Form:
        """(1/H) Lambda d on a primitive form."""
        if not self.structure.is_primitive(b):
            raise ValueError("argument must be primitive")
        x = self.Lambda(self.d(b))
        out = Form.zero(self.dim)
        for k in x.degrees():
            out = out + x.grade(k) / (self.n - k)
        return out

    def del_plus_primitive(self, b: Form) -> Form:
        """d - L (1/H) Lambda d on a primitive form."""
        if not self.structure.is_primitive(b):
            raise ValueError("argument must be primitive")
        return self.d(b) - self.L(self.del_minus_primitive(b))


def matrix_on_blades(op, dim: int, k_from: int, k_to: int) -> OperatorMatrix:
    """Materialize a degree-homogeneous operator over canonical blade bases.

    Raises if the operator's image on some blade leaves degree ``k_to``.
    """
    dom = blades(dim, k_from)
    cod = blades(dim, k_to)
    idx = {m: i for i, m in enumerate(cod)}
    cols = [form_to_coords(op(Form(dim, {m: 1})), idx) for m in dom]
    return OperatorMatrix.from_columns(cols, len(cod), domain=dom, codomain=cod)

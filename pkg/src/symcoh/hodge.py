"""Finite-dimensional Hodge theory on the invariant complex.

A compatible triple (omega, J, g) is built exactly: a symplectic basis is
computed by linear symplectic Gram-Schmidt over the rationals, J is the
standard rotation in that basis, and g(x, y) = omega(x, Jy).  The complex
splitting operator multiplies each (p, q) component by i^(p-q); it needs
Gaussian-rational coefficients internally but returns real forms for real
input.  The Riemannian star is the splitting operator composed with the
symplectic star, and the inner product is integration of a ^ *a' against the
Liouville volume (normalized so the pairing of 1 with itself is 1, which
keeps the Gram matrices positive definite regardless of how omega^n sits
against the reference orientation).

All harmonic spaces, adjoints and decomposition checks are exact matrix
computations over the primitive bases.
"""

from __future__ import annotations

from fractions import Fraction

from .exterior import Form, blade_degree, blade_indices, blades, form_to_coords
from .linalg import (
    OperatorMatrix,
    Subspace,
    det,
    image,
    kernel,
    subspace_intersect,
    vec_dot,
)
from .reports import CheckResult
from .scalars import GaussianRational, i_power, imag_part, real_part
from .symplectic import (
    SymplecticComplex,
    SymplecticStructure,
    _factorial,
    matrix_on_blades,
)


def _pairing(w: list[list[Fraction]], x: dict, y: dict) -> Fraction:
    out = Fraction(0)
    for i, xv in x.items():
        for j, yv in y.items():
            if w[i][j]:
                out += xv * w[i][j] * yv
    return out


def darboux_basis(structure: SymplecticStructure,
                  order: list[int] | None = None) -> list[tuple[dict, dict]]:
    """Symplectic Gram-Schmidt: pairs (u_i, v_i) with omega(u_i, v_j) = d_ij.

    ``order`` permutes which coordinate vectors seed the pivoting; any order
    yields a valid basis (used to exhibit metric independence).
    """
    dim = structure.dim
    w = structure.matrix
    seq = list(order) if order is not None else list(range(dim))
    if sorted(seq) != list(range(dim)):
        raise ValueError("order must be a permutation of 0..2n-1")
    remaining = [{c: Fraction(1)} for c in seq]
    pairs = []
    while remaining:
        u = remaining.pop(0)
        if not u:
            raise AssertionError("degenerate vector during symplectic reduction")
        partner = None
        for idx, cand in enumerate(remaining):
            val = _pairing(w, u, cand)
            if val:
                partner = idx
                break
        if partner is None:
            raise AssertionError("no symplectic partner found; omega degenerate?")
        v = {j: c / val for j, c in remaining.pop(partner).items()}
        projected = []
        for x in remaining:
            wx = _pairing(w, v, x)
            ux = _pairing(w, u, x)
            y = dict(x)
            for j, c in u.items():
                y[j] = y.get(j, 0) + wx * c
            for j, c in v.items():
                y[j] = y.get(j, 0) - ux * c
            projected.append({j: c for j, c in y.items() if c})
        remaining = projected
        pairs.append((u, v))
    return pairs


class CompatibleTriple:
    """omega together with an exact compatible complex structure and metric."""

    def __init__(self, structure: SymplecticStructure, order: list[int] | None = None):
        self.structure = structure
        dim = structure.dim
        n = structure.n
        pairs = darboux_basis(structure, order)
        basis_cols = []
        for u, v in pairs:
            basis_cols.append(u)
            basis_cols.append(v)
        self.basis = OperatorMatrix.from_columns(basis_cols, dim)
        basis_inv = self.basis.invert()
        jstd_cols = []
        for j in range(n):
            jstd_cols.append({2 * j + 1: Fraction(1)})
            jstd_cols.append({2 * j: Fraction(-1)})
        jstd = OperatorMatrix.from_columns(jstd_cols, dim)
        self.J = self.basis @ jstd @ basis_inv
        w_mat = OperatorMatrix.from_rows(
            [{j: structure.matrix[i][j] for j in range(dim) if structure.matrix[i][j]}
             for i in range(dim)], dim)
        g = w_mat @ self.J
        self.metric = [[g.entry(i, j) for j in range(dim)] for i in range(dim)]
        self._validate(w_mat)
        # complex cobasis: theta_j = u*_j + i v*_j, then the conjugates
        dual = [ {j: basis_inv.entry(a, j) for j in range(dim) if basis_inv.entry(a, j)}
                 for a in range(dim) ]
        t_rows = []
        for j in range(n):
            t_rows.append({b: GaussianRational(dual[2 * j].get(b, 0), dual[2 * j + 1].get(b, 0))
                           for b in set(dual[2 * j]) | set(dual[2 * j + 1])})
        for j in range(n):
            t_rows.append({b: GaussianRational(dual[2 * j].get(b, 0), -dual[2 * j + 1].get(b, 0))
                           for b in set(dual[2 * j]) | set(dual[2 * j + 1])})
        t = OperatorMatrix.from_rows(t_rows, dim)
        t_inv = t.invert()
        self._f_in_e = [Form(dim, {1 << b: t.entry(a, b) for b in range(dim)})
                        for a in range(dim)]
        self._e_in_f = [Form(dim, {1 << a: t_inv.entry(b, a) for a in range(dim)})
                        for b in range(dim)]
        self._p_mask = (1 << n) - 1

    def _validate(self, w_mat: OperatorMatrix):
        dim = self.structure.dim
        if (self.J @ self.J) != OperatorMatrix.identity(dim).scale(-1):
            raise AssertionError("J^2 != -1")
        for i in range(dim):
            for j in range(i):
                if self.metric[i][j] != self.metric[j][i]:
                    raise AssertionError("metric is not symmetric")
        for k in range(1, dim + 1):
            minor = det([row[:k] for row in self.metric[:k]], k)
            if minor <= 0:
                raise AssertionError("metric is not positive definite")
        if (self.J.transpose() @ w_mat @ self.J) != w_mat:
            raise AssertionError("J does not preserve omega")

    # -- the complex splitting operator ---------------------------------

    def _substitute(self, a: Form, images: list[Form]) -> Form:
        out = Form.zero(a.dim)
        for mask, c in a.items():
            term = Form.scalar(a.dim, c)
            for i in blade_indices(mask):
                term = term.wedge(images[i - 1])
            out = out + term
        return out

    def jay_complex(self, a: Form, direction: int = 1) -> Form:
        """Multiply each (p, q) component by i^(direction * (p - q))."""
        in_f = self._substitute(a, self._e_in_f)
        scaled = {}
        for mask, c in in_f.items():
            p = (mask & self._p_mask).bit_count()
            q = blade_degree(mask) - p
            scaled[mask] = c * i_power(direction * (p - q))
        return self._substitute(Form(a.dim, scaled), self._f_in_e)

    def jay(self, a: Form) -> Form:
        """Real form of the splitting operator; real input gives real output."""
        z = self.jay_complex(a)
        coeffs = {}
        for mask, c in z.items():
            if imag_part(c):
                raise AssertionError(f"complex residue in splitting operator: {z}")
            coeffs[mask] = real_part(c)
        return Form(a.dim, coeffs)

    def jay_inverse(self, a: Form) -> Form:
        z = self.jay_complex(a, direction=-1)
        coeffs = {}
        for mask, c in z.items():
            if imag_part(c):
                raise AssertionError(f"complex residue in splitting operator: {z}")
            coeffs[mask] = real_part(c)
        return Form(a.dim, coeffs)

    def hodge_star(self, a: Form) -> Form:
        """Riemannian star of the triple: splitting operator after the
        symplectic star."""
        return self.jay(self.structure.star(a))


def build_triple(omega, order: list[int] | None = None) -> CompatibleTriple:
    """Compatible triple for a non-degenerate 2-form (or structure)."""
    st = omega if isinstance(omega, SymplecticStructure) else SymplecticStructure(omega)
    return CompatibleTriple(st, order)


def hodge_star(a: Form, triple: CompatibleTriple) -> Form:
    return triple.hodge_star(a)


def jay(a: Form, triple: CompatibleTriple) -> Form:
    return triple.jay(a)


# ---------------------------------------------------------------------------
# inner product and adjoints
# ---------------------------------------------------------------------------

class InnerProduct:
    """Gram matrices of <a, a'> = integral of a ^ *a' per degree.

    Integration is against the Liouville volume omega^n/n!, so <1, 1> = 1 and
    every Gram matrix is positive definite.
    """

    def __init__(self, triple: CompatibleTriple):
        self.triple = triple
        self.structure = triple.structure
        self.dim = triple.structure.dim
        self._top = (1 << self.dim) - 1
        self._norm = triple.structure.volume().coeff(self._top)
        self._gram: dict[int, OperatorMatrix] = {}
        self._gram_inv: dict[int, OperatorMatrix] = {}

    def pair(self, a: Form, b: Form) -> Fraction:
        return a.wedge(self.triple.hodge_star(b)).coeff(self._top) / self._norm

    def gram(self, k: int) -> OperatorMatrix:
        cached = self._gram.get(k)
        if cached is not None:
            return cached
        basis = blades(self.dim, k)
        stars = [self.triple.hodge_star(Form(self.dim, {m: 1})) for m in basis]
        cols = []
        for j in range(len(basis)):
            col = {}
            for i, m in enumerate(basis):
                v = Form(self.dim, {m: 1}).wedge(stars[j]).coeff(self._top) / self._norm
                if v:
                    col[i] = v
            cols.append(col)
        g = OperatorMatrix.from_columns(cols, len(basis))
        if g != g.transpose():
            raise AssertionError(f"Gram matrix at degree {k} is not symmetric")
        self._gram[k] = g
        return g

    def gram_inverse(self, k: int) -> OperatorMatrix:
        cached = self._gram_inv.get(k)
        if cached is None:
            cached = self.gram(k).invert()
            self._gram_inv[k] = cached
        return cached

    def adjoint(self, op: OperatorMatrix, dom_degree: int, cod_degree: int) -> OperatorMatrix:
        """Adjoint over blade bases: <Op a, b> = <a, adjoint(Op) b>."""
        return self.gram_inverse(dom_degree) @ op.transpose() @ self.gram(cod_degree)


def adjoint_in_bases(op: OperatorMatrix, gram_dom: OperatorMatrix,
                     gram_cod: OperatorMatrix) -> OperatorMatrix:
    """Adjoint of op: dom -> cod for arbitrary basis Gram matrices."""
    return gram_dom.invert() @ op.transpose() @ gram_cod


def gram_of_forms(ip: InnerProduct, forms: list[Form]) -> OperatorMatrix:
    stars = [ip.triple.hodge_star(f) for f in forms]
    top = ip._top
    cols = []
    for j in range(len(forms)):
        col = {}
        for i, f in enumerate(forms):
            v = f.wedge(stars[j]).coeff(top) / ip._norm
            if v:
                col[i] = v
        cols.append(col)
    return OperatorMatrix.from_columns(cols, len(forms))


# ---------------------------------------------------------------------------
# harmonic theory on the primitive complex
# ---------------------------------------------------------------------------

class HodgeTheory:
    """Laplacians, harmonic spaces and structure checks for one fixture."""

    def __init__(self, cx: SymplecticComplex, triple: CompatibleTriple | None = None):
        self.cx = cx
        self.st = cx.structure
        self.n = cx.n
        self.dim = cx.dim
        self.triple = triple if triple is not None else CompatibleTriple(self.st)
        if self.triple.structure.omega != self.st.omega:
            raise ValueError("triple was built for a different omega")
        self.ip = InnerProduct(self.triple)
        self._prim_gram: dict[int, OperatorMatrix] = {}
        self._prim_matrix: dict[tuple[str, int], OperatorMatrix] = {}

    # -- primitive-basis plumbing ----------------------------------------

    def prim_basis(self, k: int) -> list[Form]:
        if 0 <= k <= self.n:
            return self.st.primitive_basis(k)
        return []

    def prim_gram(self, k: int) -> OperatorMatrix:
        cached = self._prim_gram.get(k)
        if cached is None:
            cached = gram_of_forms(self.ip, self.prim_basis(k))
            self._prim_gram[k] = cached
        return cached

    def prim_matrix(self, which: str, k: int) -> OperatorMatrix:
        """del_plus: P^k -> P^{k+1} or del_minus: P^k -> P^{k-1}."""
        key = (which, k)
        cached = self._prim_matrix.get(key)
        if cached is not None:
            return cached
        op = self.cx.del_plus if which == "plus" else self.cx.del_minus
        k_to = k + 1 if which == "plus" else k - 1
        dom = self.prim_basis(k)
        cod_forms = self.prim_basis(k_to)
        if not cod_forms:
            for f in dom:
                if op(f):
                    raise AssertionError("operator image outside primitive range")
            m = OperatorMatrix(0, len(dom), [{} for _ in dom])
        else:
            sub = self.st.primitive_subspace(k_to)
            idx = {b: i for i, b in enumerate(blades(self.dim, k_to))}
            cols = []
            for f in dom:
                coords = sub.coordinates(form_to_coords(op(f), idx))
                if coords is None:
                    raise AssertionError(f"image is not primitive: {op(f)}")
                cols.append({i: c for i, c in enumerate(coords) if c})
            m = OperatorMatrix.from_columns(cols, len(cod_forms))
        self._prim_matrix[key] = m
        return m

    def _prim_to_ambient(self, sub: Subspace, k: int) -> Subspace:
        order = blades(self.dim, k)
        idx = {b: i for i, b in enumerate(order)}
        bm = OperatorMatrix.from_columns(
            [form_to_coords(f, idx) for f in self.prim_basis(k)], len(order))
        return Subspace(len(order), [bm.apply(r) for r in sub.rows])

    def _forms_from_prim_coords(self, rows: list[dict], k: int) -> list[Form]:
        basis = self.prim_basis(k)
        out = []
        for r in rows:
            f = Form.zero(self.dim)
            for j, c in r.items():
                f = f + basis[j] * c
            out.append(f)
        return out

    # -- harmonic spaces ---------------------------------------------------

    def _updown(self, which: str, k: int):
        if which == "plus":
            d_out = self.prim_matrix("plus", k)            # P^k -> P^{k+1}
            d_in = self.prim_matrix("plus", k - 1) if k >= 1 else \
                OperatorMatrix(len(self.prim_basis(k)), 0, [])
            g_out = self.prim_gram(k + 1)
            g_in = self.prim_gram(k - 1) if k >= 1 else OperatorMatrix.identity(0)
        elif which == "minus":
            d_out = self.prim_matrix("minus", k)           # P^k -> P^{k-1}
            d_in = self.prim_matrix("minus", k + 1)        # P^{k+1} -> P^k
            g_out = self.prim_gram(k - 1) if k >= 1 else OperatorMatrix.identity(0)
            g_in = self.prim_gram(k + 1)
        else:
            raise ValueError("which must be 'plus' or 'minus'")
        return d_out, d_in, g_out, g_in

    def laplacian(self, k: int, which: str) -> OperatorMatrix:
        if not 0 <= k < self.n:
            raise ValueError(f"harmonic degree must be in 0..{self.n - 1}, got {k}")
        g_k = self.prim_gram(k)
        d_out, d_in, g_out, g_in = self._updown(which, k)
        d_out_star = adjoint_in_bases(d_out, g_k, g_out)
        d_in_star = adjoint_in_bases(d_in, g_in, g_k)
        return d_in @ d_in_star + d_out_star @ d_out

    def harmonic_space(self, k: int, which: str) -> tuple[Subspace, list[Form]]:
        """Kernel of the Laplacian on P^k; checked against ker(d) ^ ker(d*).

        Returns the subspace in primitive coordinates plus its basis forms.
        """
        if not 0 <= k < self.n:
            raise ValueError(f"harmonic degree must be in 0..{self.n - 1}, got {k}")
        g_k = self.prim_gram(k)
        d_out, d_in, g_out, g_in = self._updown(which, k)
        d_in_star = adjoint_in_bases(d_in, g_in, g_k)
        via_laplacian = kernel(self.laplacian(k, which))
        via_kernels = subspace_intersect(kernel(d_out), kernel(d_in_star))
        if via_laplacian != via_kernels:
            raise AssertionError(
                "harmonic space differs between Laplacian kernel and ker(d) ^ ker(d*)")
        return via_laplacian, self._forms_from_prim_coords(via_laplacian.rows, k)

    def harmonic_dimension(self, k: int, which: str) -> int:
        return self.harmonic_space(k, which)[0].dim

    # -- structure checks ----------------------------------------------------

    def check_hodge_decomposition(self, k: int, which: str) -> CheckResult:
        """P^k = harmonic + image + coimage, orthogonal with matching dims."""
        name = f"hodge-decomposition(k={k}, {which})"
        g_k = self.prim_gram(k)
        d_out, d_in, g_out, g_in = self._updown(which, k)
        d_out_star = adjoint_in_bases(d_out, g_k, g_out)
        harm, _ = self.harmonic_space(k, which)
        im_in = image(d_in)
        im_adj = image(d_out_star)
        details = []
        ok = True
        total = harm.dim + im_in.dim + im_adj.dim
        if total != len(self.prim_basis(k)):
            ok = False
            details.append(
                f"dimensions {harm.dim}+{im_in.dim}+{im_adj.dim} != {len(self.prim_basis(k))}")
        pieces = [("harmonic", harm), ("image", im_in), ("coimage", im_adj)]
        for i in range(3):
            for j in range(i + 1, 3):
                for a in pieces[i][1].rows:
                    for b in pieces[j][1].rows:
                        if vec_dot(a, g_k.apply(b)):
                            ok = False
                            details.append(
                                f"{pieces[i][0]} not orthogonal to {pieces[j][0]}")
        return CheckResult(name, ok, details)

    def check_jay_conjugation(self, k: int) -> CheckResult:
        """Conjugating del_plus by the splitting operator gives the adjoint of
        del_minus times the eigenvalue of H+R, and dually; exact over Q(i)."""
        name = f"jay-conjugation(k={k})"
        dim, n = self.dim, self.n
        jk = matrix_on_blades(self.triple.jay_complex, dim, k, k)
        jk1 = matrix_on_blades(self.triple.jay_complex, dim, k + 1, k + 1)
        m_dp = matrix_on_blades(self.cx.del_plus, dim, k, k + 1)
        m_dm = matrix_on_blades(self.cx.del_minus, dim, k + 1, k)
        g_k = self.ip.gram(k)
        g_k1 = self.ip.gram(k + 1)
        m_dm_star = g_k1.invert() @ m_dm.transpose() @ g_k      # k -> k+1
        m_dp_star = g_k.invert() @ m_dp.transpose() @ g_k1      # k+1 -> k
        s_hr_k = matrix_on_blades(
            lambda a: self.st.apply_rs(a, lambda r, s: Fraction(n - r - s)), dim, k, k)
        details = []
        ok = True
        if (jk1 @ m_dp @ jk.invert()) != (m_dm_star @ s_hr_k):
            ok = False
            details.append("conjugate of del_plus != adjoint(del_minus) (H+R)")
        if (jk @ m_dp_star @ jk1.invert()) != (s_hr_k @ m_dm):
            ok = False
            details.append("conjugate of adjoint(del_plus) != (H+R) del_minus")
        if k < n:
            hp, hp_forms = self.harmonic_space(k, "plus")
            hm, _ = self.harmonic_space(k, "minus")
            mapped = Subspace(len(self.prim_basis(k)), [
                self._prim_coords(self.triple.jay(f), k) for f in hp_forms])
            if mapped != hm:
                ok = False
                details.append("splitting operator does not map harmonic(+) onto harmonic(-)")
        return CheckResult(name, ok, details)

    def _prim_coords(self, f: Form, k: int) -> dict:
        idx = {b: i for i, b in enumerate(blades(self.dim, k))}
        coords = self.st.primitive_subspace(k).coordinates(form_to_coords(f, idx))
        if coords is None:
            raise AssertionError(f"form is not primitive: {f}")
        return {i: c for i, c in enumerate(coords) if c}

    def pairing_matrix(self, k: int, reps_plus: list[Form],
                       reps_minus: list[Form]) -> OperatorMatrix:
        """Gram matrix of the duality pairing between degree-k classes."""
        power = self.st.L_power(Form.scalar(self.dim, 1), self.n - k) \
            / _factorial(self.n - k)
        cols = []
        for b_minus in reps_minus:
            col = {}
            for i, b_plus in enumerate(reps_plus):
                v = self.cx.integrate(power.wedge(b_plus).wedge(b_minus))
                if v:
                    col[i] = v
            cols.append(col)
        return OperatorMatrix.from_columns(cols, len(reps_plus))


def run_hodge_suite(cx: SymplecticComplex) -> CheckResult:
    """Harmonic dimensions vs quotients, orthogonal decomposition, splitting
    conjugation, pairing rank, elliptic index, and stability of the harmonic
    dimensions under a different symplectic basis choice."""
    from .cohomology import CohomologyCalculator

    details = []
    ok = True
    ht = HodgeTheory(cx)
    calc = CohomologyCalculator(cx)
    n = cx.n
    for k in range(n):
        for which, gname in (("plus", "p+"), ("minus", "p-")):
            hdim = ht.harmonic_dimension(k, which)
            qdim = calc.group(gname, k).dimension
            if hdim != qdim:
                ok = False
                details.append(f"k={k} {which}: harmonic {hdim} != quotient {qdim}")
            dec = ht.check_hodge_decomposition(k, which)
            if not dec.passed:
                ok = False
                details.extend(f"{dec.name}: {d}" for d in dec.details)
        conj = ht.check_jay_conjugation(k)
        if not conj.passed:
            ok = False
            details.extend(f"{conj.name}: {d}" for d in conj.details)
        pm = ht.pairing_matrix(k, calc.group("p+", k).representatives,
                               calc.group("p-", k).representatives)
        if not (pm.nrows == pm.ncols == pm.rank()):
            ok = False
            details.append(f"k={k}: pairing matrix rank-deficient")
    idx = calc.elliptic_index()
    if idx != 0:
        ok = False
        details.append(f"elliptic index = {idx}, expected 0")
    # metric independence: a second symplectic basis choice, reversed pivots
    alt = HodgeTheory(cx, CompatibleTriple(cx.structure,
                                           order=list(range(cx.dim))[::-1]))
    for k in range(n):
        for which in ("plus", "minus"):
            if alt.harmonic_dimension(k, which) != ht.harmonic_dimension(k, which):
                ok = False
                details.append(f"k={k} {which}: harmonic dimension depends on the metric")
    return CheckResult("hodge-suite", ok, details)

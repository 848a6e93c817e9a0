"""Finite quotient algebras, the standard families, and the verification suite.

A classified ideal of finite codimension yields a quotient with an explicit
basis of canonical representatives and an exact structure-constant table.
On top of that sit the two parametric families (axis-difference and
double-axis generators, with or without the extra radical collapse), the
Miyamoto orbit machinery, and a battery of hand-checked small quotients.
"""

from __future__ import annotations

from . import elements as el
from . import linalg
from .eigen import EIGENVALUES, eigendecompose
from .fields import Field, Scalar
from .ideals import IdealArgumentError, IdealData, ideal_of, membership


class QuotientError(ValueError):
    pass


class FiniteAlgebra:
    """A finite-dimensional quotient with basis labels and structure constants.

    ``basis_keys`` are single basis keys of the big algebra whose images
    form a basis of the quotient; structure constants are stored as a map
    (i, j) with i <= j to the coefficient vector of the product.
    """

    def __init__(self, source_ideal: IdealData, j_relative: bool = False):
        field = source_ideal.field
        self.field = field
        self.source_ideal = source_ideal
        self.j_relative = j_relative
        if source_ideal.kind == "zero":
            raise QuotientError("quotient by the zero ideal is not finite")
        if source_ideal.kind == "in_j" and not j_relative:
            raise QuotientError(
                "an ideal inside the radical has infinite codimension; "
                "pass j_relative=True for the quotient inside the radical")
        if source_ideal.kind == "pattern" and j_relative:
            raise QuotientError("j_relative only applies to radical ideals")

        if source_ideal.kind == "full":
            self.basis_keys = []
        elif source_ideal.kind == "in_j":
            k = source_ideal.j_ideal.level // 3
            self.basis_keys = [("p", r, 3 * h)
                               for h in range(1, k) for r in (1, 2)]
        else:
            pat = source_ideal.pattern
            pivots = set()
            for row in pat.extension_rows:
                pivots.add(next(i for i, c in enumerate(row) if c))
            self.basis_keys = [key for i, key in enumerate(pat.survivor_keys)
                               if i not in pivots]
        self._key_pos = {k: i for i, k in enumerate(self.basis_keys)}
        self.basis_labels = [el.Element(field, {k: field.one})
                             for k in self.basis_keys]
        self.structure: dict[tuple[int, int], list[Scalar]] = {}
        n = self.dim
        for i in range(n):
            for j in range(i, n):
                prod = self.basis_labels[i] * self.basis_labels[j]
                self.structure[(i, j)] = self.to_vector(prod)

    @property
    def dim(self) -> int:
        return len(self.basis_keys)

    def to_vector(self, x: el.Element) -> list[Scalar]:
        """Coordinates of the image of ``x`` in the quotient basis."""
        rem = self.source_ideal.reduce(x)
        vec = [self.field.zero] * self.dim
        for key, c in rem.terms.items():
            pos = self._key_pos.get(key)
            if pos is None:  # pragma: no cover - reduce precludes this
                raise QuotientError(f"key {key} outside the quotient basis")
            vec[pos] = c
        return vec

    def from_vector(self, vec) -> el.Element:
        """The canonical representative with the given coordinates."""
        return el.Element(self.field,
                          {k: c for k, c in zip(self.basis_keys, vec) if c})

    def mult(self, u, v) -> list[Scalar]:
        """Product of two coordinate vectors via the structure constants."""
        out = [self.field.zero] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                row = self.structure[(i, j) if i <= j else (j, i)]
                for t, s in enumerate(row):
                    if s:
                        out[t] = out[t] + c * s
        return out

    def adjoint(self, u) -> list[list[Scalar]]:
        """Matrix of left multiplication by the coordinate vector ``u``."""
        cols = []
        for j in range(self.dim):
            e = [self.field.zero] * self.dim
            e[j] = self.field.one
            cols.append(self.mult(u, e))
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def weight(self, u) -> Scalar:
        """The induced weight map (sum of axis-image coefficients)."""
        acc = self.field.zero
        for key, c in zip(self.basis_keys, u):
            if key[0] == "a":
                acc = acc + c
        return acc

    def induced_map(self, aut: el.Automorphism) -> list[list[Scalar]] | None:
        """Matrix of the map induced by an automorphism, or None if the
        ideal is not invariant under it (checked on the basis images)."""
        cols = [self.to_vector(el.apply(aut, b)) for b in self.basis_labels]
        # invariance: the induced map must be multiplicative
        m = [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(i, self.dim):
                lhs = linalg.mat_vec(m, self.structure[(i, j)], self.field)
                rhs = self.mult(cols[i], cols[j])
                if lhs != rhs:
                    return None
        return m


def quotient(source_ideal: IdealData,
             j_relative: bool = False) -> FiniteAlgebra:
    """Finite quotient by a classified ideal of finite codimension."""
    return FiniteAlgebra(source_ideal, j_relative=j_relative)


# -- Miyamoto machinery inside a quotient ---------------------------------------


def eigenspace_split(q: FiniteAlgebra, axis_vec):
    """Split the quotient into adjoint eigenspaces of an idempotent.

    Returns a dict eigenvalue -> list of basis vectors, or None when the
    eigenspaces do not exhaust the quotient.
    """
    field = q.field
    ad = q.adjoint(axis_vec)
    values = []
    for num, den in ((1, 1), (5, 2), (0, 1), (2, 1), (1, 2)):
        v = field.scalar(num, den)
        if v not in values:
            values.append(v)
    spaces = {}
    total = 0
    for v in values:
        m = [[ad[i][j] - (v if i == j else field.zero)
              for j in range(q.dim)] for i in range(q.dim)]
        basis = linalg.kernel_basis(m, field)
        if basis:
            spaces[v] = basis
            total += len(basis)
    if total != q.dim:
        return None
    return spaces


def miyamoto_matrix(q: FiniteAlgebra, axis_vec) -> list[list[Scalar]] | None:
    """The involution negating the half-eigenspace of an axis image."""
    field = q.field
    spaces = eigenspace_split(q, axis_vec)
    if spaces is None:
        return None
    half = field.scalar(1, 2)
    cols_in = []
    cols_out = []
    for v, basis in spaces.items():
        sign = -field.one if v == half else field.one
        for b in basis:
            cols_in.append(b)
            cols_out.append(linalg.vec_scale(b, sign))
    # solve P = out * in^{-1} column by column
    n = q.dim
    m_in = [[cols_in[j][i] for j in range(n)] for i in range(n)]
    p_cols = []
    for k in range(n):
        e = [field.zero] * n
        e[k] = field.one
        coeffs = linalg.solve(m_in, e, field)
        if coeffs is None:  # pragma: no cover - spaces span by construction
            return None
        col = [field.zero] * n
        for c, out in zip(coeffs, cols_out):
            if c:
                col = linalg.vec_add(col, linalg.vec_scale(out, c))
        p_cols.append(col)
    return [[p_cols[j][i] for j in range(n)] for i in range(n)]


class AxisOrbit:
    """Closure of the two generating axis images under Miyamoto maps."""

    def __init__(self, axes, closed: bool, miyamoto_group_order):
        self.axes = axes
        self.closed = closed
        self.miyamoto_group_order = miyamoto_group_order


def axis_orbit(q: FiniteAlgebra, cutoff: int) -> AxisOrbit:
    field = q.field
    start = [q.to_vector(el.axis(field, 0)), q.to_vector(el.axis(field, 1))]
    axes = []
    seen = set()
    for v in start:
        t = tuple(v)
        if t not in seen:
            seen.add(t)
            axes.append(v)
    maps = {}
    closed = True
    while True:
        if len(axes) > cutoff:
            closed = False
            break
        for v in axes:
            t = tuple(v)
            if t not in maps:
                m = miyamoto_matrix(q, v)
                if m is None:  # pragma: no cover - axes always decompose
                    raise QuotientError(
                        "axis image without total eigendecomposition")
                maps[t] = m
        new = []
        for m in maps.values():
            for v in axes:
                img = linalg.mat_vec(m, v, field)
                ti = tuple(img)
                if ti not in seen:
                    seen.add(ti)
                    new.append(img)
        if not new:
            break
        axes.extend(new)

    order = "unbounded at cutoff"
    if closed:
        gens = [tuple(map(tuple, m)) for m in maps.values()]
        group = set()
        frontier = list(dict.fromkeys(gens))
        ident = tuple(tuple(field.one if i == j else field.zero
                            for j in range(q.dim)) for i in range(q.dim))
        group.add(ident)
        cap = max(4 * cutoff, 64)
        ok = True
        while frontier:
            g = frontier.pop()
            if g in group:
                continue
            group.add(g)
            if len(group) > cap:
                ok = False
                break
            for h in gens:
                prod = linalg.mat_mul([list(r) for r in g],
                                      [list(r) for r in h], field)
                frontier.append(tuple(map(tuple, prod)))
        order = len(group) if ok else "unbounded at cutoff"
    return AxisOrbit(axes, closed, order)


# -- the standard families -------------------------------------------------------


def family_Hn(n: int, field: Field, collapse_j: bool = False) -> FiniteAlgebra:
    """Quotient by (a_0 - a_n), optionally also collapsing the p-span."""
    if n < 1:
        raise IdealArgumentError("n must be >= 1")
    gens = [el.axis(field, 0) - el.axis(field, n)]
    if collapse_j:
        gens.append(el.pi(field, 1, 3))
    return FiniteAlgebra(ideal_of(gens))


def family_Ln(n: int, field: Field, collapse_j: bool = False) -> FiniteAlgebra:
    """Quotient by (2a_0 - a_{-n} - a_n), optionally collapsing the p-span."""
    if n < 1:
        raise IdealArgumentError("n must be >= 1")
    two = field.scalar(2)
    gens = [el.axis(field, 0).scale(two)
            - el.axis(field, -n) - el.axis(field, n)]
    if collapse_j:
        gens.append(el.pi(field, 1, 3))
    return FiniteAlgebra(ideal_of(gens))


# -- the exceptional-quotient verification suite ----------------------------------


def _case(name: str, ok: bool, **details) -> dict:
    out = {"case": name, "ok": bool(ok)}
    out.update(details)
    return out


def small_quotient_suite(field: Field) -> list[dict]:
    """Re-verify the small exceptional quotients by direct computation.

    Returns one report entry per case; characteristic-specific cases run
    only in their characteristic and are marked skipped elsewhere.
    """
    p = field.characteristic
    a = lambda i: el.axis(field, i)
    s = lambda j: el.sigma(field, j)
    report = []

    # (a) quotient by (a_0 - a_2): 3-dimensional, trivial half-eigenspace
    q2 = family_Hn(2, field)
    half = field.scalar(1, 2)
    spaces = eigenspace_split(q2, q2.to_vector(a(0)))
    ok = (q2.dim == 3
          and set(q2.basis_keys) == {("a", 0), ("a", 1), ("s", 1)}
          and spaces is not None and half not in spaces)
    report.append(_case("two_generator_collapse", ok, dim=q2.dim))

    # (b) quotient by (2a_0 - a_{-1} - a_1): 2-dimensional, the reflection
    # through 0 acts nontrivially
    q1 = family_Ln(1, field)
    m = q1.induced_map(el.tau(0))
    ident = [[field.one if i == j else field.zero for j in range(q1.dim)]
             for i in range(q1.dim)]
    report.append(_case("double_axis_line", q1.dim == 2 and m is not None
                        and m != ident, dim=q1.dim))

    # (c) one-parameter deformations: q-bar acts as the scalar (3/4)(d+3)
    deltas_ok = []
    for d in (-3, -1, 0, 1, 2):
        dd = field.scalar(d)
        gen = a(0) + a(1).scale(dd) - a(2).scale(dd) - a(3)
        qd = FiniteAlgebra(ideal_of([gen]))
        qelt = (a(0).scale(dd + field.one) + a(-1) + a(1)).scale(
            field.scalar(3, 4)) - s(1)
        qv = qd.to_vector(qelt)
        lam = field.scalar(3, 4) * (dd + field.scalar(3))
        good = qd.dim == 4
        for i in range(qd.dim):
            e = [field.zero] * qd.dim
            e[i] = field.one
            if qd.mult(qv, e) != linalg.vec_scale(e, lam):
                good = False
        deltas_ok.append(good)
    report.append(_case("deformation_scalar_action", all(deltas_ok),
                        deltas=[-3, -1, 0, 1, 2]))

    # (d) the negated-eigenvector ideal: 3-dimensional quotient which
    # factors through the delta = -3 deformation
    v1 = el.v_elem(field, 1)
    iv = ideal_of([v1])
    qv1 = FiniteAlgebra(iv)
    gen_m3 = a(0) - a(1).scale(field.scalar(3)) \
        + a(2).scale(field.scalar(3)) - a(3)
    report.append(_case("negated_eigenvector_ideal",
                        qv1.dim == 3 and membership(gen_m3, iv),
                        dim=qv1.dim))

    # (e) the degree-four generator: 6-dimensional quotient plus the
    # displayed antisymmetrisation identity
    y1 = (a(-2) - a(-1).scale(field.scalar(4)) + a(0).scale(field.scalar(6))
          - a(1).scale(field.scalar(4)) + a(2)
          - s(1).scale(field.scalar(16)) + s(2).scale(field.scalar(4)))
    qy = FiniteAlgebra(ideal_of([y1]))
    x = y1 - el.apply(el.tau(1), y1)
    target = (a(-2) - a(-1).scale(field.scalar(5))
              + a(0).scale(field.scalar(10)) - a(1).scale(field.scalar(10))
              + a(2).scale(field.scalar(5)) - a(3))
    report.append(_case("degree_four_generator",
                        qy.dim == 6 and x == target, dim=qy.dim))

    # (f) characteristic 7 only: the ideal generated by the product of the
    # two even axes in the period-4 quotient is everything
    if p == 7:
        full = ideal_of([a(0) - a(4), a(0) * a(2)])
        q4 = family_Hn(4, field)
        v0 = q4.to_vector(a(0))
        v2 = q4.to_vector(a(2))
        prod = q4.mult(v0, v2)
        recon = linalg.vec_sub(linalg.vec_scale(prod, field.scalar(2)),
                               q4.mult(v0, prod))
        report.append(_case("char7_even_product",
                            full.kind == "full" and recon == v0))
    else:
        report.append(_case("char7_even_product", True, skipped=True))

    # (g) characteristic 5 only: the mixed generator inside the period-6
    # quotient cuts out a 3-dimensional ideal (8-dimensional quotient)
    if p == 5:
        x5 = a(0) - a(1) + a(3) - a(4) + el.pi(field, 2, 3)
        q6 = family_Hn(6, field)
        ix = ideal_of([x5])
        qx = FiniteAlgebra(ix)
        identity = (x5 - el.apply(el.tau(6), x5)
                    + el.apply(el.theta(1), x5)) == a(0) - a(6)
        same = ideal_of([a(0) - a(6), x5])
        agree = (same.summary() == ix.summary()
                 and membership(a(0) - a(6), ix))
        report.append(_case("char5_mixed_generator",
                            q6.dim == 11 and qx.dim == 8
                            and identity and agree,
                            ambient_dim=q6.dim, dim=qx.dim))
    else:
        report.append(_case("char5_mixed_generator", True, skipped=True))

    # (h) the remaining small quotients and the displayed product
    w1 = el.w_elem(field, 1)
    r = a(-2) - a(-1).scale(field.scalar(2)) + a(1).scale(field.scalar(2)) \
        - a(2)
    prod_ok = w1 * v1 == r.scale(field.scalar(-3, 2))
    dims = []
    for gen, want in (
            (a(-1) - a(0) - a(1) + a(2) + s(2).scale(field.scalar(2)), 5),
            (gen_m3, 4),
            ((a(-1) - a(0) - a(1) + a(2)).scale(field.scalar(3))
             - s(2).scale(field.scalar(2)), 5)):
        qq = FiniteAlgebra(ideal_of([gen]))
        dims.append((qq.dim, want))
    report.append(_case("remaining_small_quotients",
                        prod_ok and all(got == want for got, want in dims),
                        dims=[got for got, _ in dims]))
    return report

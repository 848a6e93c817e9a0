"""Eigenstructure of the adjoint of an axis, fusion law, identity suites.

Every axis a(i) acts semisimply with eigenvalues 1, 5/2, 0, 2, 1/2
(which may coincide after reduction mod p; in characteristic 5 the
values 5/2 and 0 merge).  The decomposition at a(0) is computed slice
by slice: the i-th slice spans a(-i), a(i), s(i), p(1,i), p(2,i) and,
together with a share of a(0), splits exactly into the eigenvectors

    u(i)  -> 0      v(i)  -> 2      w(i)  -> 1/2
    z(i)  -> 5/2    wt(i) -> 1/2    a(0)  -> 1

so the decomposition is always total and the residual is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import elements as el
from .fields import Field, Scalar
from .linalg import det

EIGENVALUES = (Fraction(1), Fraction(5, 2), Fraction(0), Fraction(2),
               Fraction(1, 2))

# fusion rule table on the rational eigenvalues; missing pairs are empty
_F = Fraction
_RATIONAL_FUSION = {
    (_F(1), _F(1)): {_F(1)},
    (_F(1), _F(5, 2)): {_F(5, 2)},
    (_F(1), _F(0)): set(),
    (_F(1), _F(2)): {_F(2)},
    (_F(1), _F(1, 2)): {_F(1, 2)},
    (_F(5, 2), _F(5, 2)): {_F(5, 2)},
    (_F(5, 2), _F(0)): {_F(5, 2)},
    (_F(5, 2), _F(2)): set(),
    (_F(5, 2), _F(1, 2)): {_F(1, 2)},
    (_F(0), _F(0)): {_F(5, 2), _F(0)},
    (_F(0), _F(2)): {_F(5, 2), _F(2)},
    (_F(0), _F(1, 2)): {_F(1, 2)},
    (_F(2), _F(2)): {_F(5, 2), _F(0)},
    (_F(2), _F(1, 2)): {_F(1, 2)},
    (_F(1, 2), _F(1, 2)): {_F(5, 2), _F(0), _F(2)},
}


class FusionLaw:
    """The fusion law evaluated in a field, merging coincident values."""

    def __init__(self, field: Field):
        self.field = field
        self.values = []
        for q in EIGENVALUES:
            v = field.from_fraction(q)
            if v not in self.values:
                self.values.append(v)
        table: dict[tuple[Scalar, Scalar], set[Scalar]] = {}
        for (lam, mu), out in _RATIONAL_FUSION.items():
            lv, mv = field.from_fraction(lam), field.from_fraction(mu)
            for key in ((lv, mv), (mv, lv)):
                table.setdefault(key, set()).update(
                    field.from_fraction(q) for q in out)
        self.table = {k: frozenset(v) for k, v in table.items()}

    def allowed(self, lam: Scalar, mu: Scalar) -> frozenset:
        return self.table[(lam, mu)]


@lru_cache(maxsize=None)
def fusion_law(field: Field) -> FusionLaw:
    return FusionLaw(field)


def slice_split(x: el.Element, center: int = 0):
    """Split x relative to an axis: (a(center) coefficient, {i: slice}).

    Slice i >= 1 collects the keys a(center-i), a(center+i), s(i) and
    p(*,i).
    """
    field = x.field
    center_coeff = field.zero
    slices: dict[int, dict] = {}
    for key, c in x.terms.items():
        if key[0] == "a":
            i = abs(key[1] - center)
            if i == 0:
                center_coeff = c
                continue
        else:
            i = key[1] if key[0] == "s" else key[2]
        slices.setdefault(i, {})[key] = c
    return center_coeff, {i: el.Element(field, t)
                          for i, t in sorted(slices.items())}


@lru_cache(maxsize=None)
def _check_slice_solvable(field: Field) -> bool:
    """Assert the slice change of basis is invertible over this field."""
    i = 3
    basis = [el.axis(field, 0), el.u_elem(field, i), el.v_elem(field, i),
             el.w_elem(field, i), el.z_elem(field, i), el.w_tilde(field, i)]
    keys = [("a", 0), ("a", -i), ("a", i), ("s", i), ("p", 1, i), ("p", 2, i)]
    m = [[b.coeff(k) for b in basis] for k in keys]
    if not det(m, field):  # pragma: no cover - excluded characteristics
        raise ValueError(f"slice basis is degenerate over {field}")
    return True


@dataclass(frozen=True)
class EigenDecomposition:
    axis_index: int
    components: dict  # evaluated eigenvalue Scalar -> Element
    residual: el.Element

    def component(self, q) -> el.Element:
        field = self.residual.field
        key = field.from_fraction(q) if isinstance(q, (int, Fraction)) else q
        return self.components.get(key, el.zero(field))

    @property
    def is_total(self) -> bool:
        return self.residual.is_zero()


def eigendecompose(x: el.Element, axis_index: int = 0) -> EigenDecomposition:
    """Exact eigenspace decomposition of x for the adjoint of a(axis_index)."""
    field = x.field
    _check_slice_solvable(field)
    if axis_index:
        inner = eigendecompose(el.apply(el.theta(-axis_index), x), 0)
        back = el.theta(axis_index)
        return EigenDecomposition(
            axis_index,
            {lam: el.apply(back, comp)
             for lam, comp in inner.components.items()},
            el.apply(back, inner.residual))

    half = field.from_fraction(Fraction(1, 2))
    quarter = field.from_fraction(Fraction(1, 4))
    sixteenth = field.from_fraction(Fraction(1, 16))
    eighth = field.from_fraction(Fraction(1, 8))
    two = field.scalar(2)
    six = field.scalar(6)

    comp: dict[Scalar, el.Element] = {}

    def put(q: Fraction, elem: el.Element):
        if elem.is_zero():
            return
        key = field.from_fraction(q)
        comp[key] = comp.get(key, el.zero(field)) + elem

    a0_coeff, slices = slice_split(x, 0)
    used = field.zero
    for i, sl in slices.items():
        am, ap = sl.coeff(("a", -i)), sl.coeff(("a", i))
        s = sl.coeff(("s", i))
        cw = (am - ap) * half
        cu = s * sixteenth - (am + ap) * eighth
        cv = cu - s * quarter
        put(Fraction(0), el.u_elem(field, i).scale(cu))
        put(Fraction(2), el.v_elem(field, i).scale(cv))
        put(Fraction(1, 2), el.w_elem(field, i).scale(cw))
        if i % 3 == 0:
            p1, p2 = sl.coeff(("p", 1, i)), sl.coeff(("p", 2, i))
            cwt = (p1 + p2) * half
            cz = (p1 - p2) * half - s
            put(Fraction(5, 2), el.z_elem(field, i).scale(cz))
            put(Fraction(1, 2), el.w_tilde(field, i).scale(cwt))
        used = used + six * cu + two * cv
    put(Fraction(1), el.axis(field, 0).scale(a0_coeff - used))

    total = el.zero(field)
    for elem in comp.values():
        total = total + elem
    return EigenDecomposition(0, comp, x - total)


def fusion_check(field: Field, i_max: int) -> dict:
    """Check every product of eigenvectors against the fusion law.

    Uses the spanning eigenvectors a(0), u(i), v(i), w(i), z(i), wt(i)
    for 1 <= i <= i_max; returns a report with the number of products
    checked and any violations found.
    """
    law = fusion_law(field)
    vectors: list[tuple[Fraction, str, el.Element]] = [
        (Fraction(1), "a(0)", el.axis(field, 0))]
    for i in range(1, i_max + 1):
        vectors.append((Fraction(0), f"u({i})", el.u_elem(field, i)))
        vectors.append((Fraction(2), f"v({i})", el.v_elem(field, i)))
        vectors.append((Fraction(1, 2), f"w({i})", el.w_elem(field, i)))
        if i % 3 == 0:
            vectors.append((Fraction(5, 2), f"z({i})", el.z_elem(field, i)))
            vectors.append((Fraction(1, 2), f"wt({i})", el.w_tilde(field, i)))
    vectors = [(q, n, v) for q, n, v in vectors if not v.is_zero()]

    checked = 0
    violations = []
    for idx, (lam, name1, xv) in enumerate(vectors):
        for mu, name2, yv in vectors[idx:]:
            allowed = law.allowed(field.from_fraction(lam),
                                  field.from_fraction(mu))
            dec = eigendecompose(xv * yv)
            checked += 1
            if not dec.is_total:  # pragma: no cover - defensive
                violations.append({"pair": (name1, name2),
                                   "reason": "decomposition not total"})
                continue
            for ev, cmp_elem in dec.components.items():
                if cmp_elem.is_zero() or ev in allowed:
                    continue
                violations.append({"pair": (name1, name2),
                                   "eigenvalue": str(ev.value),
                                   "reason": "component outside fusion law"})
    return {"characteristic": field.characteristic, "i_max": i_max,
            "checked": checked, "violations": violations,
            "ok": not violations}


def miyamoto_map(x: el.Element, axis_index: int) -> el.Element:
    """Image of x under the involution negating the 1/2-eigenspace."""
    field = x.field
    half = field.from_fraction(Fraction(1, 2))
    dec = eigendecompose(x, axis_index)
    out = el.zero(field)
    for ev, cmp_elem in dec.components.items():
        out = out + (-cmp_elem if ev == half else cmp_elem)
    return out + dec.residual


def miyamoto_consistency(field: Field, axis_index: int,
                         support_bound: int) -> dict:
    """Compare the eigenspace route with the index route for miyamoto.

    The eigenspace route negates the 1/2-component of the decomposition
    at a(axis_index); the index route applies the reflection about the
    axis subscript.  The two must agree on every basis key.
    """
    keys = [("a", j) for j in range(-support_bound, support_bound + 1)]
    keys += [("s", j) for j in range(1, support_bound + 1)]
    keys += [("p", r, k) for k in range(3, support_bound + 1, 3)
             for r in (1, 2)]
    aut = el.miyamoto(axis_index)
    failures = []
    for key in keys:
        x = el.Element(field, {key: field.one})
        if miyamoto_map(x, axis_index) != el.apply(aut, x):
            failures.append(key)  # pragma: no cover - should not happen
    return {"characteristic": field.characteristic, "axis": axis_index,
            "support_bound": support_bound, "checked": len(keys),
            "failures": failures, "ok": not failures}


# -- identity suites ----------------------------------------------------------

def _entry(results, name, index, ok):
    results.append({"name": name, "index": index, "ok": bool(ok)})


def product_identity_suite(field: Field, i_max: int) -> list[dict]:
    """Product identities among the derived families c, t, u, v, z.

    Covers products with difference symbols, the transition formulas
    between the c/t and u/v families, pair-template expansions and the
    eigenvector product table used to establish the fusion law.
    """
    res: list[dict] = []
    third = Fraction(1, 3)
    for i in range(1, i_max + 1):
        for j in range(1, i_max + 1):
            ci, cj = el.c_elem(field, i), el.c_elem(field, j)
            si, sj = el.sigma(field, i), el.sigma(field, j)
            zi, zj = el.z_elem(field, i), el.z_elem(field, j)
            ui, uj = el.u_elem(field, i), el.u_elem(field, j)
            vi, vj = el.v_elem(field, i), el.v_elem(field, j)
            tij = el.t_pair(field, i, j)
            cij = el.c_pair(field, i, j)
            zij = el.z_pair(field, i, j)

            # products with the difference symbols
            for r in range(3):
                zr = el.zed(field, r, j)
                _entry(res, "axis_by_z", (i, j, r),
                       el.axis(field, i) * zr ==
                       zr * Fraction(3, 2) + el.zed(field, -(i + r), j))
            if i % 3 == 0 and j % 3 == 0:
                for r in range(3):
                    for t in range(3):
                        lhs = el.pi(field, r, i) * el.zed(field, t, j)
                        rhs = (el.pi(field, -(r + t), i)
                               + el.pi(field, -(r + t), j)) * Fraction(3, 4) \
                            - (el.pi(field, -(r + t), abs(i - j))
                               + el.pi(field, -(r + t), i + j)) * Fraction(3, 8)
                        _entry(res, "p_by_z", (i, j, r, t), lhs == rhs)
                        lhs = el.zed(field, r, i) * el.zed(field, t, j)
                        rhs = (el.zed(field, -(r + t), i)
                               + el.zed(field, -(r + t), j)) * Fraction(-3, 4) \
                            + (el.zed(field, -(r + t), abs(i - j))
                               + el.zed(field, -(r + t), i + j)) * Fraction(3, 8)
                        _entry(res, "z_by_z", (i, j, r, t), lhs == rhs)
            if j % 3 == 0:
                for r in range(3):
                    lhs = si * el.zed(field, r, j)
                    rhs = (el.zed(field, r, i) + el.zed(field, r, j)) \
                        * Fraction(3, 4) \
                        - (el.zed(field, r, abs(i - j))
                           + el.zed(field, r, i + j)) * Fraction(3, 8)
                    _entry(res, "s_by_z", (i, j, r), lhs == rhs)

            # transition formulas
            rhs = tij * 2 + zij * 2
            if i % 3:
                rhs = rhs - (el.z_elem(field, abs(i - j))
                             + el.z_elem(field, i + j)) * 3
            _entry(res, "c_by_c", (i, j), ci * cj == rhs)
            rhs = cij * Fraction(3, 8)
            if i % 3:
                rhs = rhs - zj * 3
            _entry(res, "c_by_s", (i, j), ci * sj == rhs)
            rhs = el.zero(field) if i % 3 == 0 else zj * 3
            _entry(res, "c_by_zj", (i, j), ci * zj == rhs)

            # pair rewrites and the s/z pair products
            _entry(res, "s_by_s_pair", (i, j),
                   si * sj == tij * Fraction(-3, 8))
            if i % 3 == 0 and j % 3 == 0:
                _entry(res, "z_by_z_pair", (i, j),
                       zi * zj == zij * Fraction(3, 8))
            if j % 3 == 0:
                _entry(res, "s_by_z_pair", (i, j),
                       si * zj == zij * Fraction(-3, 8))
            _entry(res, "u_pair_rewrite", (i, j),
                   el.u_pair(field, i, j) == cij * 3 + tij * 4 + zij * 4)
            _entry(res, "v_pair_rewrite", (i, j),
                   el.v_pair(field, i, j) == cij - tij * 4 - zij * 4)

            # eigenvector products
            rhs = el.u_pair(field, i, j) * 3
            if (i * j) % 3:
                rhs = rhs - zij * 21
            _entry(res, "u_by_u", (i, j), ui * uj == rhs)
            rhs = el.v_pair(field, i, j) * (-3)
            if (i * j) % 3:
                rhs = rhs - zij * 15
            _entry(res, "u_by_v", (i, j), ui * vj == rhs)
            rhs = -el.u_pair(field, i, j)
            if (i * j) % 3:
                rhs = rhs + zij * 3
            _entry(res, "v_by_v", (i, j), vi * vj == rhs)
            rhs = el.zero(field) if i % 3 == 0 else zj * 12
            _entry(res, "u_by_zj", (i, j), ui * zj == rhs)
            _entry(res, "v_by_zj", (i, j), (vi * zj).is_zero())
    return res


def twisted_identity_suite(field: Field, i_max: int) -> list[dict]:
    """Identities expressing reflected eigenvectors through products.

    These are the closed formulas used to steer ideal generation:
    images under the half-integer reflections tau(3/2) and tau(1/2) of
    the u/v/w/z/wt families written in terms of algebra products.  The
    five-halves and wt-reflection formulas only hold in characteristic
    5 and are checked there alone.
    """
    res: list[dict] = []
    t32 = el.tau(3)            # reflection about 3/2
    t12 = el.tau(1)            # reflection about 1/2
    a3, am3 = el.axis(field, 3), el.axis(field, -3)
    s3, z3 = el.sigma(field, 3), el.z_elem(field, 3)
    char5 = field.characteristic == 5
    for i in range(1, i_max + 1):
        zi = el.z_elem(field, i)
        wti = el.w_tilde(field, i)
        ui, vi = el.u_elem(field, i), el.v_elem(field, i)
        wi = el.w_elem(field, i)

        _entry(res, "z_reflect_fixed", i, el.apply(t32, zi) == zi)
        _entry(res, "wt_reflect_negated", i, el.apply(t32, wti) == -wti)

        ref_u = el.from_terms(field, [(("a", 3), 6), (("a", 3 - i), -3),
                                      (("a", 3 + i), -3)]) \
            + el.sigma(field, i) * 4 + zi * 4
        _entry(res, "u_reflect_expansion", i, el.apply(t32, ui) == ref_u)
        ref_v = el.from_terms(field, [(("a", 3), 2), (("a", 3 - i), -1),
                                      (("a", 3 + i), -1)]) \
            - el.sigma(field, i) * 4 - zi * 4
        _entry(res, "v_reflect_expansion", i, el.apply(t32, vi) == ref_v)

        tu = el.apply(t32, ui)
        tv = el.apply(t32, vi)
        shift = el.compose(t32, el.tau(0))   # net translation by -3
        cp = el.c_pair(field, 3, i)
        _entry(res, "c_pair_via_u", i,
               cp == (ui * (-2) + tu + el.apply(shift, ui)) * Fraction(1, 3))
        _entry(res, "c_pair_via_v", i,
               cp == vi * (-2) + tv + el.apply(shift, vi))

        _entry(res, "u_reflect_product", i,
               tu == ui - (a3 * ui) * Fraction(5, 4)
               + (am3 * ui) * Fraction(3, 4) + s3 * ui + z3 * ui)
        _entry(res, "v_reflect_product", i,
               tv == (a3 * vi) * Fraction(7, 12)
               - (am3 * vi) * Fraction(1, 12)
               + (s3 * vi) * Fraction(1, 3) + (z3 * vi) * Fraction(1, 3))

        if char5:
            for name, xv in (("five_halves_u", ui), ("five_halves_z", zi)):
                _entry(res, name, i,
                       el.apply(t32, xv) ==
                       xv + (am3 * xv) * 2 + s3 * xv + z3 * xv)

        # reflection about 1/2 of the half-eigenvectors, via products
        def w_formula(x):
            a1x = el.axis(field, 1) * x
            y = a1x - x * Fraction(1, 2)
            corr = el.apply(el.tau(4), y) - el.apply(
                el.compose(el.tau(4), el.tau(2)), y)
            return (el.axis(field, 0) * a1x) * Fraction(4, 3) \
                - (el.sigma(field, 1) * x) * Fraction(4, 3) \
                - x * Fraction(4, 3) - y * 2 + corr * Fraction(4, 3)

        _entry(res, "w_reflect_product", i,
               el.apply(t12, wi) == w_formula(wi))
        if char5 and i % 3 == 0:
            _entry(res, "wt_reflect_product", i,
                   el.apply(t12, wti) == w_formula(wti))

        # translation-averaging identities
        if i % 3 == 0:
            _entry(res, "wt_translation_sum", i,
                   (wti + el.apply(el.theta(2), wti)
                    + el.apply(el.theta(4), wti)).is_zero())
        for k in range(1, i_max + 1):
            if k % 3 == 0:
                continue
            if i % 3 == 0:
                _entry(res, "s_by_wt", (k, i),
                       el.sigma(field, k) * wti == wti * Fraction(3, 4))
            _entry(res, "s_by_w", (k, i),
                   el.sigma(field, k) * wi ==
                   wi * Fraction(-3, 4)
                   + (el.apply(el.theta(k), wi)
                      + el.apply(el.theta(-k), wi)) * Fraction(3, 8))
    return res

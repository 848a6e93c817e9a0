"""Elements of the infinite-dimensional cover of the Highwater algebra.

The algebra has basis

    a(i)   for i in Z          (the axes)
    s(j)   for j >= 1
    p(r,k) for r in {1, 2} and k a positive multiple of 3

over any field of characteristic other than 2 and 3.  Out-of-range
subscripts normalise to zero: s(0) = 0 and p(r,k) = 0 unless 3 | k and
k > 0.  The residue-0 symbol p(0,k) is eagerly rewritten as
-p(1,k) - p(2,k), and the difference symbols

    zed(r,k) = p(r+1,k) - p(r-1,k)    (residues mod 3)

are expanded into p's on construction, so stored P keys always carry
residue 1 or 2.

Elements are sparse dicts mapping basis keys to nonzero scalars and are
treated as immutable: all operations return fresh elements.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .fields import Field, FieldMismatchError, Scalar

# Basis keys are plain tuples: ("a", i), ("s", j), ("p", r, k) with
# r in {1, 2}, k a positive multiple of 3.
Key = tuple

# ordering rank for printing / canonical term order
_KIND_RANK = {"a": 0, "s": 1, "p": 2}


def key_sort(key: Key):
    if key[0] == "p":
        return (2, key[2], key[1])
    return (_KIND_RANK[key[0]], key[1])


class Element:
    """A finitely supported linear combination of basis keys."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: dict[Key, Scalar] | None = None):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", dict(terms) if terms else {})

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Element is immutable; use arithmetic methods")

    # -- basics ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, key: Key) -> Scalar:
        return self.terms.get(key, self.field.zero)

    def support(self) -> list[Key]:
        return sorted(self.terms, key=key_sort)

    def items(self) -> Iterator[tuple[Key, Scalar]]:
        return iter(sorted(self.terms.items(), key=lambda kv: key_sort(kv[0])))

    def _check(self, other: "Element"):
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.field is not self.field:
            raise FieldMismatchError(
                f"cannot combine elements over {self.field} and {other.field}")

    def __eq__(self, other):
        return (isinstance(other, Element)
                and other.field is self.field
                and other.terms == self.terms)

    def __hash__(self):
        return hash((self.field.characteristic,
                     frozenset(self.terms.items())))

    # -- linear structure --------------------------------------------------

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Element(self.field, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Element(self.field, {k: -c for k, c in self.terms.items()})

    def scale(self, c: Scalar) -> "Element":
        if not isinstance(c, Scalar):
            raise TypeError("scale takes a Scalar")
        if c.field is not self.field:
            raise FieldMismatchError("scalar field differs from element field")
        if not c:
            return Element(self.field)
        return Element(self.field, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, Scalar):
            return self.scale(c)
        if isinstance(c, (int, Fraction)):
            return self.scale(self.field.from_fraction(c))
        return NotImplemented

    # -- multiplication ----------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(self.field.from_fraction(other))
        if isinstance(other, Scalar):
            return self.scale(other)
        self._check(other)
        char = self.field.characteristic
        acc: dict[Key, Scalar] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c = c1 * c2
                for k3, q in _key_product(char, k1, k2):
                    v = c * self.field.from_fraction(q)
                    old = acc.get(k3)
                    v = v if old is None else old + v
                    if v:
                        acc[k3] = v
                    else:
                        acc.pop(k3, None)
        return Element(self.field, acc)

    # -- structural queries --------------------------------------------------

    def part(self, kind: str) -> "Element":
        """The pure a-, s- or p-part of the element."""
        return Element(self.field,
                       {k: c for k, c in self.terms.items() if k[0] == kind})

    def in_radical(self) -> bool:
        return not self.weight()

    def in_p_span(self) -> bool:
        """True when supported entirely on P keys (the ideal J)."""
        return all(k[0] == "p" for k in self.terms)

    def is_pure_a(self) -> bool:
        return all(k[0] == "a" for k in self.terms)

    def weight(self) -> Scalar:
        """The weight homomorphism: the sum of the a-coefficients."""
        w = self.field.zero
        for k, c in self.terms.items():
            if k[0] == "a":
                w = w + c
        return w

    def __repr__(self):
        from .textio import format_element
        return format_element(self)


# -- constructors -----------------------------------------------------------

def zero(field: Field) -> Element:
    return Element(field)


def axis(field: Field, i: int) -> Element:
    """The axis a(i)."""
    return Element(field, {("a", i): field.one})


def sigma(field: Field, j: int) -> Element:
    """The symbol s(j); s(0) = 0 and s(-j) = s(j)."""
    j = abs(j)
    if j == 0:
        return Element(field)
    return Element(field, {("s", j): field.one})


def _p_terms(r: int, k: int) -> tuple[tuple[Key, int], ...]:
    """Normalised integer support of p(r,k); p(0,k) -> -p(1,k)-p(2,k)."""
    k = abs(k)
    if k == 0 or k % 3:
        return ()
    r %= 3
    if r == 0:
        return ((("p", 1, k), -1), (("p", 2, k), -1))
    return ((("p", r, k), 1),)


def pi(field: Field, r: int, k: int) -> Element:
    """The symbol p(r,k), with residue and subscript normalisation."""
    return Element(field, {key: field.scalar(c) for key, c in _p_terms(r, k)})


def _z_terms(r: int, k: int) -> tuple[tuple[Key, int], ...]:
    """zed(r,k) = p(r+1,k) - p(r-1,k) expanded onto residue-1/2 keys."""
    k = abs(k)
    if k == 0 or k % 3:
        return ()
    r %= 3
    if r == 0:   # p1 - p2
        return ((("p", 1, k), 1), (("p", 2, k), -1))
    if r == 1:   # p2 - p0 = p1 + 2 p2
        return ((("p", 1, k), 1), (("p", 2, k), 2))
    # r == 2:    # p0 - p1 = -2 p1 - p2
    return ((("p", 1, k), -2), (("p", 2, k), -1))


def zed(field: Field, r: int, k: int) -> Element:
    """The difference symbol zed(r,k) = p(r+1,k) - p(r-1,k)."""
    return Element(field, {key: field.scalar(c) for key, c in _z_terms(r, k)})


def from_terms(field: Field, terms) -> Element:
    """Sum of (key, rational) pairs, normalising degenerate keys."""
    out = Element(field)
    for key, q in terms:
        c = field.from_fraction(q)
        if key[0] == "a":
            t = Element(field, {key: c}) if c else Element(field)
        elif key[0] == "s":
            t = sigma(field, key[1]).scale(c)
        else:
            t = pi(field, key[1], key[2]).scale(c)
        out = out + t
    return out


# -- the product ------------------------------------------------------------
#
# Structure constants for products of basis keys, expressed over Q and
# mapped into the working field on demand.  Results are cached per
# characteristic since fusion and closure computations repeat key pairs
# heavily.

_HALF = Fraction(1, 2)
_Q38 = Fraction(3, 8)
_Q34 = Fraction(3, 4)
_Q32 = Fraction(3, 2)
_Q14 = Fraction(1, 4)
_Q18 = Fraction(1, 8)


def _merge(acc: dict, key: Key, q: Fraction):
    v = acc.get(key, 0) + q
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def _add_sigma(acc, j, q):
    j = abs(j)
    if j:
        _merge(acc, ("s", j), q)


def _add_p(acc, r, k, q):
    for key, c in _p_terms(r, k):
        _merge(acc, key, q * c)


def _add_z(acc, r, k, q):
    for key, c in _z_terms(r, k):
        _merge(acc, key, q * c)


@lru_cache(maxsize=None)
def _key_product(char: int, k1: Key, k2: Key) -> tuple[tuple[Key, Fraction], ...]:
    if key_sort(k1) > key_sort(k2):
        k1, k2 = k2, k1
    acc: dict[Key, Fraction] = {}
    if k1[0] == "a" and k2[0] == "a":
        i, j = k1[1], k2[1]
        d = abs(i - j)
        _merge(acc, ("a", i), _HALF)
        _merge(acc, ("a", j), _HALF)
        _add_sigma(acc, d, Fraction(1))
        _add_z(acc, i, d, Fraction(1))
    elif k1[0] == "a" and k2[0] == "s":
        i, j = k1[1], k2[1]
        _merge(acc, ("a", i), -_Q34)
        _merge(acc, ("a", i - j), _Q38)
        _merge(acc, ("a", i + j), _Q38)
        _add_sigma(acc, j, _Q32)
        _add_z(acc, i, j, Fraction(-1))
    elif k1[0] == "a" and k2[0] == "p":
        i, (r, k) = k1[1], (k2[1], k2[2])
        _add_p(acc, r, k, _Q32)
        _add_p(acc, -(i + r), k, Fraction(-1))
    elif k1[0] == "s" and k2[0] == "s":
        j, l = k1[1], k2[1]
        _add_sigma(acc, j, _Q34)
        _add_sigma(acc, l, _Q34)
        _add_sigma(acc, abs(j - l), -_Q38)
        _add_sigma(acc, j + l, -_Q38)
    elif k1[0] == "s" and k2[0] == "p":
        j, (r, k) = k1[1], (k2[1], k2[2])
        _add_p(acc, r, j, _Q34)
        _add_p(acc, r, k, _Q34)
        _add_p(acc, r, abs(j - k), -_Q38)
        _add_p(acc, r, j + k, -_Q38)
    else:  # p * p
        (r, h), (t, k) = (k1[1], k1[2]), (k2[1], k2[2])
        u = -(r + t)
        _add_z(acc, u, h, _Q14)
        _add_z(acc, u, k, _Q14)
        _add_z(acc, u, abs(h - k), -_Q18)
        _add_z(acc, u, h + k, -_Q18)
    return tuple(acc.items())


# -- automorphisms ------------------------------------------------------------
#
# The relevant symmetries act on axis subscripts by i -> sign*i + shift.
# Reflection centres may be half-integers, so the shift of a reflection
# stores the *doubled* centre; translations store the plain offset.


class Automorphism:
    """An index map i -> sign*i + shift together with its action on keys."""

    __slots__ = ("sign", "shift")

    def __init__(self, sign: int, shift: int):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "shift", int(shift))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Automorphism is immutable")

    def index(self, i: int) -> int:
        return self.sign * i + self.shift

    def __eq__(self, other):
        return (isinstance(other, Automorphism)
                and other.sign == self.sign and other.shift == self.shift)

    def __hash__(self):
        return hash((self.sign, self.shift))

    def __repr__(self):
        if self.sign == 1:
            return f"theta({self.shift})"
        return f"tau({self.shift}/2)" if self.shift % 2 else \
            f"tau({self.shift // 2})"


def identity_aut() -> Automorphism:
    return Automorphism(1, 0)


def theta(j: int) -> Automorphism:
    """Translation by j: a(i) -> a(i+j)."""
    return Automorphism(1, j)


def tau(two_k: int) -> Automorphism:
    """Reflection about the (half-)integer centre two_k/2.

    The argument is the doubled centre, so ``tau(3)`` reflects about 3/2.
    """
    return Automorphism(-1, two_k)


def miyamoto(i: int) -> Automorphism:
    """The involution attached to axis a(i): reflection about i."""
    return tau(2 * i)


def compose(first: Automorphism, second: Automorphism) -> Automorphism:
    """Apply ``first``, then ``second`` (right action on elements)."""
    return Automorphism(first.sign * second.sign,
                        second.sign * first.shift + second.shift)


def apply(aut: Automorphism, x: Element) -> Element:
    """Image of x under the automorphism."""
    field = x.field
    out: dict[Key, Scalar] = {}

    def put(key, c):
        old = out.get(key)
        v = c if old is None else old + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    for key, c in x.terms.items():
        if key[0] == "a":
            # reflections store the doubled centre, so i -> shift - i
            put(("a", aut.index(key[1])), c)
        elif key[0] == "s":
            put(key, c)
        else:
            r, k = key[1], key[2]
            new_r = aut.sign * r + aut.shift
            cc = c if aut.sign == 1 else -c
            for pk, q in _p_terms(new_r, k):
                put(pk, cc * field.scalar(q))
    return Element(field, out)


# -- derived elements (relative to axis a(0)) ---------------------------------

def c_elem(field: Field, i: int) -> Element:
    """c(i) = 2 a(0) - a(-i) - a(i); c(0) = 0."""
    if i == 0:
        return Element(field)
    return from_terms(field, [(("a", 0), 2), (("a", -i), -1), (("a", i), -1)])


def u_elem(field: Field, i: int) -> Element:
    """0-eigenvector u(i) = 3 c(i) + 4 s(i) + 4 zed(0,i)."""
    if i == 0:
        return Element(field)
    return (c_elem(field, i) * 3 + sigma(field, i) * 4
            + zed(field, 0, i) * 4)


def v_elem(field: Field, i: int) -> Element:
    """2-eigenvector v(i) = c(i) - 4 s(i) - 4 zed(0,i)."""
    if i == 0:
        return Element(field)
    return (c_elem(field, i) - sigma(field, i) * 4
            - zed(field, 0, i) * 4)


def w_elem(field: Field, i: int) -> Element:
    """1/2-eigenvector w(i) = a(-i) - a(i)."""
    if i == 0:
        return Element(field)
    return axis(field, -i) - axis(field, i)


def z_elem(field: Field, i: int) -> Element:
    """5/2-eigenvector z(i) = p(1,i) - p(2,i) = zed(0,i)."""
    return zed(field, 0, i)


def w_tilde(field: Field, i: int) -> Element:
    """1/2-eigenvector wt(i) = p(1,i) + p(2,i) = -p(0,i)."""
    return -pi(field, 0, i)


def _pair(make, field: Field, i: int, j: int) -> Element:
    return (make(field, i) * (-2) + make(field, j) * (-2)
            + make(field, abs(i - j)) + make(field, i + j))


def c_pair(field: Field, i: int, j: int) -> Element:
    """c(i,j) = -2(c(i)+c(j)) + c(|i-j|) + c(i+j)."""
    return _pair(c_elem, field, i, j)


def t_pair(field: Field, i: int, j: int) -> Element:
    """t(i,j) = -2(s(i)+s(j)) + s(|i-j|) + s(i+j)."""
    return _pair(sigma, field, i, j)


def u_pair(field: Field, i: int, j: int) -> Element:
    return _pair(u_elem, field, i, j)


def v_pair(field: Field, i: int, j: int) -> Element:
    return _pair(v_elem, field, i, j)


def z_pair(field: Field, i: int, j: int) -> Element:
    return _pair(z_elem, field, i, j)


def first_def_s(field: Field, r: int, j: int) -> Element:
    """The residue-decorated symbol s(r,j) = s(j) + zed(r,j).

    This realises the alternative presentation whose s-symbols carry a
    residue; its arithmetic is recovered through this conversion rather
    than implemented separately.
    """
    return sigma(field, j) + zed(field, r, j)


def frobenius(x: Element, y: Element) -> Scalar:
    """The invariant bilinear form (x, y) = weight(x) * weight(y)."""
    x._check(y)
    return x.weight() * y.weight()

"""The graded Lie algebra attached to an ordered grading group.

Basis symbols are generators ``L(a,i)`` indexed by a group element ``a``
and an integer ``i >= -1``, together with one central symbol ``c``.  The
bracket of generators is

    [L(a,i), L(b,j)] = ((i+1)*b - (j+1)*a) * L(a+b, i+j)

plus a central contribution ``a*c`` exactly when ``b = -a`` and
``i + j = -2``; the central symbol commutes with everything.  The
structure constant vanishes identically whenever ``i + j`` would fall
below ``-1``, so the basis is closed under the bracket.

Over the integers instance the algebra is realized inside the space of
Laurent-polynomial symbols ``x^a f(t)`` (plus the centre) via
``L(a,i) = x^a t^(i+1)``, with

    [x^a f, x^b g] = x^(a+b) (b f' g - a f g') + a d(a,-b) f(0) g(0) c,

which :meth:`BlockAlgebra.realization_bracket` evaluates independently of
the structure constants; the two paths must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .groups import IntegerGroup, OrderedGroup, format_element
from .polynomial import Poly


@dataclass(frozen=True)
class Generator:
    alpha: object
    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < -1:
            raise ValueError("generator index must be an integer >= -1")

    def __str__(self) -> str:
        return f"L({format_element(self.alpha)},{self.index})"


@dataclass(frozen=True)
class Central:
    def __str__(self) -> str:
        return "c"


CENTRAL = Central()

BasisSymbol = Union[Generator, Central]

# Coefficients are Fraction for the integers/dyadic instances and Poly
# (over the formal infinite unit) for the lexicographic pair instance.
Coeff = Union[Fraction, Poly]


def _term_key(sym: BasisSymbol):
    if isinstance(sym, Central):
        return (1,)
    return (0, sym.alpha, sym.index)


def format_coeff(c: Coeff) -> str:
    if isinstance(c, Poly):
        return f"({c.format('w')})"
    return str(c)


class LieElement:
    """Finite linear combination of basis symbols; zero coefficients pruned."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for sym, coeff in dict(terms).items():
                if coeff:
                    data[sym] = coeff
        self._terms = data

    @classmethod
    def zero(cls) -> "LieElement":
        return cls()

    @classmethod
    def term(cls, sym: BasisSymbol, coeff: Coeff = Fraction(1)) -> "LieElement":
        return cls({sym: coeff})

    def items(self) -> List[Tuple[BasisSymbol, Coeff]]:
        return sorted(self._terms.items(), key=lambda kv: _term_key(kv[0]))

    def coefficient(self, sym: BasisSymbol) -> Coeff:
        return self._terms.get(sym, Fraction(0))

    def symbols(self):
        return list(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LieElement") -> "LieElement":
        out = dict(self._terms)
        for sym, c in other._terms.items():
            s = out.get(sym, 0) + c
            if s:
                out[sym] = s
            elif sym in out:
                del out[sym]
        res = LieElement.__new__(LieElement)
        res._terms = out
        return res

    def __neg__(self) -> "LieElement":
        return self.scaled(-1)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def scaled(self, scalar) -> "LieElement":
        if not scalar:
            return LieElement()
        res = LieElement.__new__(LieElement)
        res._terms = {sym: scalar * c for sym, c in self._terms.items()}
        return res

    def __rmul__(self, scalar) -> "LieElement":
        return self.scaled(scalar)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for sym, coeff in self.items():
            if isinstance(coeff, Poly):
                mag, neg = format_coeff(coeff) + "*" + str(sym), False
            else:
                neg = coeff < 0
                a = abs(coeff)
                mag = str(sym) if a == 1 else f"{a}*{sym}"
            if not parts:
                parts.append(("-" if neg else "") + mag)
            else:
                parts.append(("- " if neg else "+ ") + mag)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"<LieElement {self}>"

    def to_json(self, group: OrderedGroup) -> list:
        out = []
        for sym, coeff in self.items():
            if isinstance(sym, Central):
                out.append({"alpha": None, "i": "central", "coeff": _coeff_json(coeff)})
            else:
                out.append(
                    {
                        "alpha": element_json(sym.alpha),
                        "i": sym.index,
                        "coeff": _coeff_json(coeff),
                    }
                )
        return out

    @classmethod
    def from_json(cls, data: list, group: OrderedGroup) -> "LieElement":
        out = cls.zero()
        for entry in data:
            coeff = Fraction(entry["coeff"])
            if entry["i"] == "central":
                sym: BasisSymbol = CENTRAL
            else:
                sym = Generator(element_from_json(entry["alpha"], group), int(entry["i"]))
            out = out + cls.term(sym, coeff)
        return out


def element_json(x):
    if isinstance(x, tuple):
        return [x[0], x[1]]
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x)
    return x


def element_from_json(data, group: OrderedGroup):
    if isinstance(data, list):
        value = (int(data[0]), int(data[1]))
    elif isinstance(data, str):
        value = group.parse(data)
        return value
    else:
        value = int(data) if isinstance(group, IntegerGroup) else Fraction(data)
    group.validate(value)
    return value


def _coeff_json(c: Coeff) -> str:
    if isinstance(c, Poly):
        return c.format("w")
    return f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class PolyForm:
    """A symbol ``x^alpha * f(t)`` of the polynomial realization."""

    alpha: object
    poly: Poly

    def __str__(self) -> str:
        return f"x^{format_element(self.alpha)}*({self.poly})"


class BlockAlgebra:
    """Bracket evaluation, grading and the polynomial realization."""

    def __init__(self, group: OrderedGroup):
        self.group = group

    def generator(self, alpha, index: int) -> Generator:
        self.group.validate(alpha)
        return Generator(alpha, index)

    def central(self) -> Central:
        return CENTRAL

    def bracket_basis(self, a: BasisSymbol, b: BasisSymbol) -> LieElement:
        """Exact bracket of two basis symbols."""
        if isinstance(a, Central) or isinstance(b, Central):
            return LieElement.zero()
        g = self.group
        g.validate(a.alpha)
        g.validate(b.alpha)
        terms = {}
        coeff = g.scalarize(
            g.sub(g.scale(a.index + 1, b.alpha), g.scale(b.index + 1, a.alpha))
        )
        if coeff:
            # i+j = -2 forces i = j = -1, where the coefficient vanishes,
            # so the emitted index is always >= -1.
            terms[Generator(g.add(a.alpha, b.alpha), a.index + b.index)] = coeff
        if a.alpha == g.neg(b.alpha) and a.index + b.index == -2:
            cc = g.scalarize(a.alpha)
            if cc:
                terms[CENTRAL] = cc
        return LieElement(terms)

    def bracket(self, x: LieElement, y: LieElement) -> LieElement:
        """Bilinear extension of the basis bracket."""
        out = LieElement.zero()
        for sa, ca in x.items():
            for sb, cb in y.items():
                out = out + self.bracket_basis(sa, sb).scaled(ca * cb)
        return out

    def weight_of(self, e: LieElement):
        """The common grading weight, or None when mixed or zero.

        The central symbol counts as weight zero.
        """
        weight = None
        for sym, _ in e.items():
            w = self.group.zero() if isinstance(sym, Central) else sym.alpha
            if weight is None:
                weight = w
            elif weight != w:
                return None
        return weight

    # -- polynomial realization (integers instance only) ----------------

    def _require_integer_instance(self):
        if not isinstance(self.group, IntegerGroup):
            raise ValueError(
                "the polynomial realization is defined over the integers instance"
            )

    def from_poly(self, form: PolyForm) -> LieElement:
        """x^alpha t^(i+1) -> L(alpha, i), applied termwise."""
        self._require_integer_instance()
        self.group.validate(form.alpha)
        terms = {}
        for n, c in enumerate(form.poly.coeffs):
            if c:
                terms[Generator(form.alpha, n - 1)] = c
        return LieElement(terms)

    def to_poly(self, e: LieElement) -> List[PolyForm]:
        """Group the terms of ``e`` by weight; rejects central terms."""
        self._require_integer_instance()
        buckets = {}
        for sym, coeff in e.items():
            if isinstance(sym, Central):
                raise ValueError("the central symbol has no polynomial image")
            buckets.setdefault(sym.alpha, {})[sym.index + 1] = coeff
        out = []
        for alpha in sorted(buckets):
            d = buckets[alpha]
            coeffs = [d.get(n, Fraction(0)) for n in range(max(d) + 1)]
            out.append(PolyForm(alpha, Poly(coeffs)))
        return out

    def realization_bracket(self, p1: PolyForm, p2: PolyForm) -> LieElement:
        """Bracket evaluated in the polynomial realization.

        Independent of :meth:`bracket_basis`; used as its oracle.
        """
        self._require_integer_instance()
        a, f = p1.alpha, p1.poly
        b, g = p2.alpha, p2.poly
        h = b * (f.derivative() * g) - a * (f * g.derivative())
        out = self.from_poly(PolyForm(a + b, h))
        if a == -b:
            cc = Fraction(a) * f.coefficient(0) * g.coefficient(0)
            if cc:
                out = out + LieElement.term(CENTRAL, cc)
        return out

"""Highest weight modules with a PBW monomial basis.

A module vector is an exact linear combination of normal-ordered words

    L(-a_1, i_1) * ... * L(-a_k, i_k) * v,

where the parts ``a_s`` are positive group elements, weakly increasing
left to right, and the indices ``i_s`` weakly increase within a run of
equal parts.  The highest weight functional assigns a rational label to
every weight-zero generator and a central charge to the central symbol;
positive-weight generators annihilate ``v``.

Straightening is a two-step recursion:

* a negative generator is inserted into a word by adjacent swaps
  ``A B = B A + [A, B]``; the commutator of two negative generators is a
  single negative generator on a shorter word, so insertion terminates
  (parts only merge into larger parts);
* a zero- or positive-weight generator commutes toward ``v``, spawning
  commutator terms that are processed recursively by weight sign; at
  ``v`` the positive part acts as zero and the zero modes act through
  the labels.

Termination is provable by induction on (word length, inversion count),
but an explicit work counter still guards every top-level action so an
implementation bug fails loudly instead of hanging.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .groups import IntegerGroup, LexPairGroup, OrderedGroup
from .lie import (
    BasisSymbol,
    BlockAlgebra,
    Central,
    Coeff,
    LieElement,
    element_json,
    format_coeff,
)
from .polynomial import Poly

Factor = Tuple[object, int]  # (positive part, index >= -1)


class StraighteningLimitError(RuntimeError):
    """The straightening work counter was exhausted (step budget)."""


@dataclass(frozen=True)
class PBWMonomial:
    """Normal-ordered word applied to the highest weight vector."""

    factors: Tuple[Factor, ...] = ()

    @property
    def length(self) -> int:
        return len(self.factors)

    def sort_key(self):
        return (len(self.factors), self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "v"
        from .groups import format_element

        return (
            "*".join(f"L(-{format_element(p)},{i})" for p, i in self.factors) + "*v"
        )


VACUUM = PBWMonomial(())


class ModuleVector:
    """Exact linear combination of PBW monomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for mono, coeff in dict(terms).items():
                if coeff:
                    data[mono] = coeff
        self._terms = data

    @classmethod
    def zero(cls) -> "ModuleVector":
        return cls()

    @classmethod
    def of(cls, mono: PBWMonomial, coeff: Coeff = Fraction(1)) -> "ModuleVector":
        return cls({mono: coeff})

    def items(self) -> List[Tuple[PBWMonomial, Coeff]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, mono: PBWMonomial) -> Coeff:
        return self._terms.get(mono, Fraction(0))

    def monomials(self) -> List[PBWMonomial]:
        return [m for m, _ in self.items()]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        res = ModuleVector.__new__(ModuleVector)
        res._terms = out
        return res

    def __neg__(self) -> "ModuleVector":
        return self.scaled(-1)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + (-other)

    def scaled(self, scalar) -> "ModuleVector":
        if not scalar:
            return ModuleVector()
        res = ModuleVector.__new__(ModuleVector)
        res._terms = {m: scalar * c for m, c in self._terms.items()}
        return res

    def __rmul__(self, scalar) -> "ModuleVector":
        return self.scaled(scalar)

    def weight(self, group: OrderedGroup):
        """Common weight of all monomials, or None when mixed or zero."""
        w = None
        for mono in self._terms:
            s = group.zero()
            for p, _ in mono.factors:
                s = group.add(s, p)
            mw = group.neg(s)
            if w is None:
                w = mw
            elif w != mw:
                return None
        return w

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.items():
            if isinstance(coeff, Poly):
                mag, neg = format_coeff(coeff) + "*" + str(mono), False
            else:
                neg = coeff < 0
                a = abs(coeff)
                mag = str(mono) if a == 1 else f"{a}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + mag)
            else:
                parts.append(("- " if neg else "+ ") + mag)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"<ModuleVector {self}>"

    def to_json(self, group: OrderedGroup) -> dict:
        w = self.weight(group)
        return {
            "weight": element_json(w) if w is not None else None,
            "terms": [
                {
                    "factors": [[element_json(p), i] for p, i in mono.factors],
                    "coeff": (
                        c.format("w")
                        if isinstance(c, Poly)
                        else f"{c.numerator}/{c.denominator}"
                    ),
                }
                for mono, c in self.items()
            ],
        }


# -- highest weight functionals -----------------------------------------


class ExplicitLabels:
    """Finitely supported label sequence, zero beyond the stored prefix."""

    def __init__(self, values: Iterable[Union[int, Fraction]]):
        self.values = tuple(Fraction(v) for v in values)

    def label(self, i: int) -> Fraction:
        return self.values[i] if i < len(self.values) else Fraction(0)

    def describe(self) -> str:
        return f"explicit({len(self.values)} stored)"

    def to_json(self):
        return {"explicit": [f"{v.numerator}/{v.denominator}" for v in self.values]}


class RecurrentLabels:
    """Labels generated by a monic polynomial recurrence.

    For f = sum a_j t^j monic of degree d >= 1 and central charge cc the
    defining conditions are, probing against every power t^m:

        m = 0:   sum_j j * a_j * label(j-1) = a_0 * cc
        m >= 1:  sum_j (j+m) * a_j * label(j+m-1) = 0

    The m = 0 instance fixes label(d-1) from the d-1 free initial labels
    (coefficient d != 0), and each m >= 1 instance fixes label(d+m-1).
    Labels are memoized; the table is append-only, so sharing a weight
    between workers is safe under the GIL, or give each worker its own.
    """

    def __init__(self, charpoly: Poly, initial: Sequence[Union[int, Fraction]], central_charge):
        if not charpoly.is_monic or charpoly.degree < 1:
            raise ValueError("recurrence polynomial must be monic of degree >= 1")
        if len(initial) != charpoly.degree - 1:
            raise ValueError(
                f"expected {charpoly.degree - 1} initial labels, got {len(initial)}"
            )
        self.charpoly = charpoly
        self.central_charge = Fraction(central_charge)
        self._memo: List[Fraction] = [Fraction(v) for v in initial]

    def label(self, i: int) -> Fraction:
        d = self.charpoly.degree
        a = self.charpoly.coefficient
        memo = self._memo
        while len(memo) <= i:
            n = len(memo)  # computing label(n)
            if n == d - 1:
                s = a(0) * self.central_charge
                for j in range(1, d):
                    s -= j * a(j) * memo[j - 1]
                memo.append(s / d)
            else:
                m = n - d + 1  # n = d + m - 1 with m >= 1
                s = Fraction(0)
                for j in range(0, d):
                    s += (j + m) * a(j) * memo[j + m - 1]
                memo.append(-s / (d + m))
        return memo[i]

    def describe(self) -> str:
        return f"recurrent(f = {self.charpoly})"

    def to_json(self):
        return {
            "charpoly": [
                f"{c.numerator}/{c.denominator}" for c in self.charpoly.coeffs
            ],
            "initial": [
                f"{v.numerator}/{v.denominator}"
                for v in self._memo[: self.charpoly.degree - 1]
            ],
        }


class HighestWeight:
    """Central charge plus the label sequence of the weight-zero modes."""

    def __init__(self, central_charge, labels):
        self.central_charge = Fraction(central_charge)
        self.labels = labels

    @classmethod
    def explicit(cls, values, central_charge) -> "HighestWeight":
        return cls(central_charge, ExplicitLabels(values))

    @classmethod
    def zero(cls) -> "HighestWeight":
        return cls(0, ExplicitLabels(()))

    def label(self, i: int) -> Fraction:
        if i < 0:
            raise ValueError("labels are defined for indices >= 0")
        return self.labels.label(i)

    def shadow(self, n: int) -> Fraction:
        """The sequence n * label(n-1), with value 0 at n = 0."""
        if n < 0:
            raise ValueError("shadow sequence starts at 0")
        return Fraction(0) if n == 0 else n * self.label(n - 1)

    def is_recurrent(self) -> bool:
        return isinstance(self.labels, RecurrentLabels)

    def describe(self) -> str:
        return f"cc={self.central_charge}, labels {self.labels.describe()}"

    def to_json(self) -> dict:
        cc = self.central_charge
        return {
            "central_charge": f"{cc.numerator}/{cc.denominator}",
            "labels": self.labels.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "HighestWeight":
        cc = Fraction(data.get("central_charge", 0))
        spec = data.get("labels", data)
        if "charpoly" in spec:
            f = Poly([Fraction(v) for v in spec["charpoly"]])
            initial = [Fraction(v) for v in spec.get("initial", ())]
            return cls(cc, RecurrentLabels(f, initial, cc))
        if "explicit" in spec:
            return cls.explicit([Fraction(v) for v in spec["explicit"]], cc)
        raise ValueError("weight spec needs either 'charpoly' or 'explicit' labels")


# -- the module ----------------------------------------------------------


class VermaModule:
    """Straightening engine for one algebra and one highest weight."""

    def __init__(self, algebra: BlockAlgebra, weight: HighestWeight, step_budget: int = 5_000_000):
        self.algebra = algebra
        self.group = algebra.group
        self.hw = weight
        self.step_budget = step_budget

    # -- construction and validation ------------------------------------

    def vacuum(self) -> ModuleVector:
        return ModuleVector.of(VACUUM)

    def monomial(self, factors: Iterable[Factor]) -> PBWMonomial:
        """Validated normal-ordered word."""
        g = self.group
        fs = tuple((p, int(i)) for p, i in factors)
        prev = None
        for p, i in fs:
            g.validate(p)
            if not g.is_positive(p):
                raise ValueError(f"part {p} is not positive")
            if i < -1:
                raise ValueError("index must be >= -1")
            if prev is not None and (p, i) < prev:
                raise ValueError("factors are not normal-ordered")
            prev = (p, i)
        return PBWMonomial(fs)

    def vector(self, factors: Iterable[Factor]) -> ModuleVector:
        return ModuleVector.of(self.monomial(factors))

    def zero_mode(self, sym: BasisSymbol) -> Fraction:
        """Value of the weight functional on a weight-zero symbol."""
        if isinstance(sym, Central):
            return self.hw.central_charge
        if sym.alpha != self.group.zero():
            raise ValueError("zero-mode action needs a weight-zero symbol")
        return self.hw.label(sym.index + 1)

    # -- straightening ---------------------------------------------------

    def act(self, sym: BasisSymbol, vec: ModuleVector) -> ModuleVector:
        """Exact action of a basis symbol, result in normal form."""
        budget = [self.step_budget]
        out: Dict[PBWMonomial, Coeff] = {}
        if isinstance(sym, Central):
            cc = self.hw.central_charge
            for mono, c in vec._terms.items():
                _accumulate(out, mono, c * cc)
        else:
            self.group.validate(sym.alpha)
            for mono, c in vec._terms.items():
                self._apply(sym.alpha, sym.index, mono.factors, c, out, budget)
        return ModuleVector(out)

    def act_element(self, elem: LieElement, vec: ModuleVector) -> ModuleVector:
        """Linear extension of :meth:`act` over a Lie element."""
        out = ModuleVector.zero()
        for sym, coeff in elem.items():
            out = out + self.act(sym, vec).scaled(coeff)
        return out

    def act_word(self, word: Iterable[BasisSymbol], vec: ModuleVector) -> ModuleVector:
        """Apply symbols right to left, as written in an operator product."""
        for sym in reversed(list(word)):
            vec = self.act(sym, vec)
        return vec

    def _tick(self, budget):
        budget[0] -= 1
        if budget[0] < 0:
            raise StraighteningLimitError(
                f"straightening exceeded the {self.step_budget}-step budget"
            )

    def _insert(self, part, idx, factors, coeff, out, budget):
        """Multiply the word by L(-part, idx) on the left and normalize."""
        self._tick(budget)
        if not factors or (part, idx) <= factors[0]:
            _accumulate(out, PBWMonomial(((part, idx),) + factors), coeff)
            return
        g = self.group
        (p1, i1), rest = factors[0], factors[1:]
        # L(-part) L(-p1) = L(-p1) L(-part) + [L(-part), L(-p1)]
        swapped: Dict[PBWMonomial, Coeff] = {}
        self._insert(part, idx, rest, coeff, swapped, budget)
        for mono, c in swapped.items():
            self._insert(p1, i1, mono.factors, c, out, budget)
        merged = g.scalarize(g.sub(g.scale(i1 + 1, part), g.scale(idx + 1, p1)))
        if merged:
            self._insert(g.add(part, p1), idx + i1, rest, coeff * merged, out, budget)

    def _apply(self, gamma, idx, factors, coeff, out, budget):
        """Act with L(gamma, idx), any weight sign, on a normal word."""
        self._tick(budget)
        g = self.group
        sign = g.compare(gamma, g.zero())
        if sign < 0:
            self._insert(g.neg(gamma), idx, factors, coeff, out, budget)
            return
        if not factors:
            if sign == 0:
                _accumulate(out, VACUUM, coeff * self.hw.label(idx + 1))
            return  # the positive part annihilates the highest weight vector
        (p1, i1), rest = factors[0], factors[1:]
        # L(gamma) L(-p1) = L(-p1) L(gamma) + [L(gamma), L(-p1)]
        passed: Dict[PBWMonomial, Coeff] = {}
        self._apply(gamma, idx, rest, coeff, passed, budget)
        for mono, c in passed.items():
            self._insert(p1, i1, mono.factors, c, out, budget)
        bcoeff = g.scalarize(
            g.sub(g.scale(idx + 1, g.neg(p1)), g.scale(i1 + 1, gamma))
        )
        if bcoeff:
            self._apply(g.add(gamma, g.neg(p1)), idx + i1, rest, coeff * bcoeff, out, budget)
        if gamma == p1 and idx + i1 == -2:
            cc = g.scalarize(gamma) * self.hw.central_charge
            if cc:
                _accumulate(out, PBWMonomial(rest), coeff * cc)

    # -- weight space enumeration ----------------------------------------

    def weight_basis(
        self,
        mu,
        max_index: int,
        parts: Optional[Sequence] = None,
        max_parts: Optional[int] = None,
    ) -> List[PBWMonomial]:
        """All normal-ordered monomials of weight ``mu`` within the horizon.

        Indices range over [-1, max_index].  Over the integers the part
        catalog defaults to 1..|mu|; any other instance must supply a
        finite catalog of positive parts (a dense order admits infinitely
        many decompositions).  The lexicographic instance additionally
        needs ``max_parts``: positivity alone does not bound word length
        there.
        """
        g = self.group
        g.validate(mu)
        sign = g.compare(mu, g.zero())
        if sign > 0:
            raise ValueError("weight spaces sit at non-positive weights")
        if sign == 0:
            return [VACUUM]
        target = g.neg(mu)
        if parts is None:
            if isinstance(g, IntegerGroup):
                parts = list(range(1, target + 1))
            else:
                raise ValueError(
                    f"the {g.name} instance needs an explicit part catalog"
                )
        parts = sorted(set(parts))
        for p in parts:
            g.validate(p)
            if not g.is_positive(p):
                raise ValueError(f"catalog part {p} is not positive")
        if isinstance(g, LexPairGroup) and max_parts is None:
            raise ValueError("the lex-z2 instance needs a max_parts bound")

        sequences: List[Tuple] = []

        def dfs(remaining, start, chosen):
            if remaining == g.zero():
                sequences.append(tuple(chosen))
                return
            if max_parts is not None and len(chosen) >= max_parts:
                return
            for k in range(start, len(parts)):
                p = parts[k]
                # every continuation adds at least p, so overshoot prunes
                if g.compare(p, remaining) > 0:
                    break
                chosen.append(p)
                dfs(g.sub(remaining, p), k, chosen)
                chosen.pop()

        dfs(target, 0, [])

        idx_range = range(-1, max_index + 1)
        out = []
        for seq in sequences:
            runs = [(p, len(list(grp))) for p, grp in itertools.groupby(seq)]
            choices = [
                list(itertools.combinations_with_replacement(idx_range, r))
                for _, r in runs
            ]
            for pick in itertools.product(*choices):
                factors = []
                for (p, _), idxs in zip(runs, pick):
                    factors.extend((p, i) for i in idxs)
                out.append(PBWMonomial(tuple(factors)))
        out.sort(key=PBWMonomial.sort_key)
        return out

    # -- submodule closure -------------------------------------------------

    def submodule_generated(
        self,
        seeds: Sequence[ModuleVector],
        catalog: Sequence[BasisSymbol],
        depth: int,
    ) -> Dict[object, List[ModuleVector]]:
        """Spanning vectors of the closure of ``seeds`` under the catalog.

        Applies every catalogued symbol up to ``depth`` times and files
        the nonzero results by weight.  A spanning set, not a basis.
        """
        seen = set(seeds)
        frontier = list(seeds)
        collected = list(seeds)
        for _ in range(depth):
            new = []
            for vec in frontier:
                for sym in catalog:
                    w = self.act(sym, vec)
                    if w and w not in seen:
                        seen.add(w)
                        new.append(w)
            collected.extend(new)
            frontier = new
            if not frontier:
                break
        by_weight: Dict[object, List[ModuleVector]] = {}
        for vec in collected:
            by_weight.setdefault(vec.weight(self.group), []).append(vec)
        return by_weight


def _accumulate(store: Dict[PBWMonomial, Coeff], mono: PBWMonomial, coeff: Coeff):
    if not coeff:
        return
    s = store.get(mono, 0) + coeff
    if s:
        store[mono] = s
    elif mono in store:
        del store[mono]

"""Exact symmetric functions in the elementary and power-sum bases.

A symmetric function is a sparse map from partitions to ``Fraction``
coefficients. Products of basis elements are multiset unions of partitions
in both bases (e_0 = 1 is keyed by the empty partition). ``EIExpansion``
holds composition-keyed coefficients and flattens onto the e-basis by
rearranging parts.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Any, ClassVar, Iterable, Mapping, Union

from .compositions import Composition, Partition, rho

Scalar = Union[int, Fraction]
RawTerms = dict[tuple[int, ...], Fraction]


class NonIntegralCoefficientError(ArithmeticError):
    """A coefficient expected to be an integer is not."""


def _as_fraction(value: Scalar | str) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _mul_raw(left: Mapping[tuple[int, ...], Fraction], right: Mapping[tuple[int, ...], Fraction]) -> RawTerms:
    out: RawTerms = defaultdict(Fraction)
    for lp, lc in left.items():
        for rp, rc in right.items():
            out[tuple(sorted(lp + rp, reverse=True))] += lc * rc
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True, eq=False)
class _SymFunc:
    degree: int
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    basis: ClassVar[str] = "?"

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError(f"degree must be >= 0, got {self.degree}")
        clean: dict[Partition, Fraction] = {}
        for key, value in self.coeffs.items():
            part = key if isinstance(key, Partition) else Partition.of(key)
            if part.size != self.degree:
                raise ValueError(f"partition {part} has size {part.size}, expected degree {self.degree}")
            coeff = _as_fraction(value)
            if coeff:
                clean[part] = clean.get(part, Fraction(0)) + coeff
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    # --- constructors ---

    @classmethod
    def zero(cls, degree: int = 0):
        return cls(degree, {})

    @classmethod
    def one(cls):
        return cls(0, {Partition(): Fraction(1)})

    @classmethod
    def basis_element(cls, *parts: int, coeff: Scalar = 1):
        """e_lambda (or p_lambda) for the given parts in any order; zero parts are dropped."""

        part = Partition.of(p for p in parts if p != 0)
        return cls(part.size, {part: _as_fraction(coeff)})

    @classmethod
    def _from_raw(cls, degree: int, raw: Mapping[tuple[int, ...], Fraction]):
        return cls(degree, {Partition(k): v for k, v in raw.items()})

    # --- queries ---

    def coefficient(self, partition: Partition | Iterable[int]) -> Fraction:
        part = partition if isinstance(partition, Partition) else Partition.of(partition)
        return self.coeffs.get(part, Fraction(0))

    def terms(self) -> list[tuple[Partition, Fraction]]:
        """Nonzero terms, partitions in decreasing lexicographic order."""

        return sorted(self.coeffs.items(), key=lambda item: item[0].parts, reverse=True)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def assert_integral(self) -> None:
        for part, coeff in self.terms():
            if coeff.denominator != 1:
                raise NonIntegralCoefficientError(f"coefficient of {self.basis}_{part} is {coeff}")

    # --- arithmetic ---

    def _check_same_basis(self, other: Any) -> None:
        if not isinstance(other, _SymFunc):
            raise TypeError(f"expected a symmetric function, got {type(other).__name__}")
        if other.basis != self.basis:
            raise TypeError(f"cannot combine {self.basis}-basis with {other.basis}-basis")

    def __add__(self, other: _SymFunc):
        self._check_same_basis(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        if other.degree != self.degree:
            raise ValueError(f"cannot add degree {self.degree} and degree {other.degree}")
        merged = dict(self.coeffs)
        for part, coeff in other.coeffs.items():
            merged[part] = merged.get(part, Fraction(0)) + coeff
        return type(self)(self.degree, merged)

    def __neg__(self):
        return type(self)(self.degree, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: _SymFunc):
        return self + (-other)

    def __mul__(self, other: _SymFunc | Scalar):
        if isinstance(other, (int, Fraction)):
            factor = _as_fraction(other)
            return type(self)(self.degree, {k: v * factor for k, v in self.coeffs.items()})
        self._check_same_basis(other)
        raw = _mul_raw(
            {k.parts: v for k, v in self.coeffs.items()},
            {k.parts: v for k, v in other.coeffs.items()},
        )
        return type(self)._from_raw(self.degree + other.degree, raw)

    def __rmul__(self, other: Scalar):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other: Scalar):
        return self * (Fraction(1) / _as_fraction(other))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            return False
        if not self.coeffs and not other.coeffs:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.basis, self.degree, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"0 [{self.basis}, degree {self.degree}]"
        return " + ".join(f"{c}*{self.basis}_{p}" for p, c in self.terms())

    # --- serialization ---

    def to_json(self) -> dict[str, Any]:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [{"partition": list(p.parts), "coeff": str(c)} for p, c in self.terms()],
        }

    def compact(self) -> dict[str, str]:
        """``{"421": "26", ...}``; the empty partition is labelled ``"0"``."""

        return {str(p): str(c) for p, c in self.terms()}


class SymFuncE(_SymFunc):
    basis: ClassVar[str] = "e"


class SymFuncP(_SymFunc):
    basis: ClassVar[str] = "p"


SymFunc = Union[SymFuncE, SymFuncP]


def symfunc_from_json(payload: Mapping[str, Any]) -> SymFunc:
    basis = payload.get("basis")
    cls = {"e": SymFuncE, "p": SymFuncP}.get(basis)
    if cls is None:
        raise ValueError(f"unknown basis {basis!r}")
    terms = payload.get("terms")
    if terms is None:
        raise ValueError("symmetric function missing 'terms' field")
    return cls(
        int(payload["degree"]),
        {Partition.of(t["partition"]): Fraction(t["coeff"]) for t in terms},
    )


def e(*parts: int) -> SymFuncE:
    """Shorthand for e_lambda; ``e()`` and ``e(0)`` are the constant 1."""

    return SymFuncE.basis_element(*parts)


def p(*parts: int) -> SymFuncP:
    return SymFuncP.basis_element(*parts)


def sf_add(f: SymFunc, g: SymFunc) -> SymFunc:
    return f + g


def sf_scale(f: SymFunc, scalar: Scalar) -> SymFunc:
    return f * _as_fraction(scalar)


def sf_mul(f: SymFunc, g: SymFunc) -> SymFunc:
    return f * g


@dataclass(frozen=True, eq=False)
class EIExpansion:
    """Composition-keyed coefficients c_I of an e_I-expansion."""

    degree: int
    terms: Mapping[Composition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[Composition, Fraction] = {}
        for key, value in self.terms.items():
            comp = key if isinstance(key, Composition) else Composition(tuple(key))
            if comp.size != self.degree:
                raise ValueError(f"composition {comp} has size {comp.size}, expected {self.degree}")
            coeff = _as_fraction(value)
            if coeff:
                clean[comp] = clean.get(comp, Fraction(0)) + coeff
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    def coefficient(self, composition: Composition | Iterable[int]) -> Fraction:
        comp = composition if isinstance(composition, Composition) else Composition(tuple(composition))
        return self.terms.get(comp, Fraction(0))

    def sorted_terms(self) -> list[tuple[Composition, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: item[0].parts)

    def flatten(self) -> SymFuncE:
        return ei_flatten(self)

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def negative_terms(self) -> list[tuple[Composition, Fraction]]:
        return [(k, c) for k, c in self.sorted_terms() if c < 0]

    def __add__(self, other: EIExpansion) -> EIExpansion:
        if not isinstance(other, EIExpansion):
            return NotImplemented
        if self.terms and other.terms and self.degree != other.degree:
            raise ValueError(f"cannot add degree {self.degree} and degree {other.degree}")
        merged = dict(self.terms)
        for comp, coeff in other.terms.items():
            merged[comp] = merged.get(comp, Fraction(0)) + coeff
        return EIExpansion(self.degree if self.terms else other.degree, merged)

    def __mul__(self, scalar: Scalar) -> EIExpansion:
        factor = _as_fraction(scalar)
        return EIExpansion(self.degree, {k: v * factor for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EIExpansion):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.terms.items())))

    def to_json(self) -> list[dict[str, Any]]:
        return [{"composition": list(k.parts), "coeff": str(c)} for k, c in self.sorted_terms()]


def ei_flatten(expansion: EIExpansion) -> SymFuncE:
    """Sum c_I over compositions with the same rearranged partition."""

    grouped: dict[Partition, Fraction] = defaultdict(Fraction)
    for comp, coeff in expansion.terms.items():
        grouped[rho(comp)] += coeff
    return SymFuncE(expansion.degree, grouped)


@lru_cache(maxsize=None)
def _power_sum_in_e(k: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    # p_k = (-1)^(k-1) k e_k + sum_{i=1}^{k-1} (-1)^(k-1-i) e_{k-i} p_i
    out: RawTerms = defaultdict(Fraction)
    out[(k,)] += Fraction((-1) ** (k - 1) * k)
    for i in range(1, k):
        sign = (-1) ** (k - 1 - i)
        for parts, coeff in _power_sum_in_e(i):
            out[tuple(sorted(parts + (k - i,), reverse=True))] += sign * coeff
    return tuple((key, val) for key, val in out.items() if val)


@lru_cache(maxsize=4096)
def _power_partition_in_e(parts: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    acc: RawTerms = {(): Fraction(1)}
    for part in parts:
        acc = _mul_raw(acc, dict(_power_sum_in_e(part)))
    return tuple(acc.items())


def p_to_e(f: SymFuncP) -> SymFuncE:
    """Rewrite a power-sum expansion in the elementary basis (Newton identities)."""

    if not isinstance(f, SymFuncP):
        raise TypeError(f"p_to_e expects a p-basis function, got {type(f).__name__}")
    out: RawTerms = defaultdict(Fraction)
    for part, coeff in f.coeffs.items():
        for key, val in _power_partition_in_e(part.parts):
            out[key] += coeff * val
    return SymFuncE._from_raw(f.degree, {k: v for k, v in out.items() if v})


def principal_eval(f: SymFunc, k: int) -> Fraction:
    """Evaluate at x_1 = ... = x_k = 1 and all other variables 0."""

    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    total = Fraction(0)
    for part, coeff in f.coeffs.items():
        if f.basis == "e":
            value = 1
            for n in part.parts:
                value *= comb(k, n)
        else:
            value = k ** len(part.parts)
        total += coeff * value
    return total


@dataclass(frozen=True)
class PositivityResult:
    positive: bool
    witness: tuple[Partition, Fraction] | None = None

    def __bool__(self) -> bool:
        return self.positive


def is_e_positive(f: SymFuncE) -> PositivityResult:
    """Nonnegativity of every e-coefficient; the witness is the first negative term in term order."""

    if f.basis != "e":
        raise TypeError("e-positivity is defined for e-basis functions")
    for part, coeff in f.terms():
        if coeff < 0:
            return PositivityResult(False, (part, coeff))
    return PositivityResult(True)

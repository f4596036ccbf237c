"""Closed positive e_I-expansions for paths, lollipops, tadpoles, K-chains,
clique-path-cycle graphs, path-clique-paths and clique-clique-paths.

Every function returns an ``EIExpansion`` keyed by compositions of the
graph order; ``.flatten()`` gives the e-basis expansion of X_G.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .compositions import Composition, compositions_of, surplus, w_weight, weak_compositions
from .symfunc import EIExpansion, NonIntegralCoefficientError


def _check_integral(expansion: EIExpansion, label: str) -> EIExpansion:
    for comp, coeff in expansion.terms.items():
        if coeff.denominator != 1:
            raise NonIntegralCoefficientError(f"{label}: coefficient of e_{comp} is {coeff}")
    return expansion


def path_eI(n: int) -> EIExpansion:
    """X_{P_n} = sum of w_I e_I over I |= n."""

    if n < 1:
        raise ValueError(f"path order must be >= 1, got {n}")
    return EIExpansion(n, {comp: Fraction(w_weight(comp)) for comp in compositions_of(n)})


def lollipop_eI(a: int, n: int) -> EIExpansion:
    """X of K_a with a tail of length n-a."""

    if not 1 <= a <= n:
        raise ValueError(f"lollipop needs 1 <= a <= n, got a={a}, n={n}")
    scale = factorial(a - 1)
    return EIExpansion(
        n,
        {comp: Fraction(scale * w_weight(comp)) for comp in compositions_of(n) if comp[-1] >= a},
    )


def tadpole_eI(n: int, l: int) -> EIExpansion:
    """X of the cycle C_{n-l} with a tail of length l."""

    if not 0 <= l <= n - 2:
        raise ValueError(f"tadpole needs 0 <= l <= n-2, got n={n}, l={l}")
    return EIExpansion(
        n,
        {comp: Fraction(surplus(comp, l + 1) * w_weight(comp)) for comp in compositions_of(n)},
    )


def _kchain_admissible(alpha: tuple[int, ...], gamma: tuple[int, ...]) -> bool:
    l = len(gamma)
    for i in range(1, l):
        alpha_tail = sum(alpha[i:])
        gamma_tail = sum(gamma[i:]) - (l - 1 - i)
        if alpha[i] < gamma[i - 1]:
            if not alpha_tail < gamma_tail:
                return False
        elif not alpha_tail >= gamma_tail:
            return False
    return True


def kchain_eI(gamma: tuple[int, ...] | Composition) -> EIExpansion:
    """K-chain expansion over weak compositions; zero parts are e_0 = 1 and are dropped."""

    parts = tuple(gamma)
    if not parts or any(p < 2 for p in parts):
        raise ValueError(f"K-chain parts must be >= 2, got {parts}")
    l = len(parts)
    order = sum(parts) - l + 1
    scale = factorial(parts[-1] - 1)
    for p in parts[:-1]:
        scale *= factorial(p - 2)

    terms: dict[Composition, Fraction] = {}
    for alpha in weak_compositions(order, l):
        if not _kchain_admissible(alpha, parts):
            continue
        coeff = alpha[0]
        for i in range(1, l):
            coeff *= abs(alpha[i] - parts[i - 1] + 1)
        if not coeff:
            continue
        comp = Composition(tuple(x for x in alpha if x))
        terms[comp] = terms.get(comp, Fraction(0)) + scale * coeff
    return EIExpansion(order, terms)


def kpc_coefficient(comp: Composition, a: int, b: int) -> Fraction:
    """c_K of the clique-path-cycle expansion."""

    if comp.length >= 2 and comp[1] < a:
        return Fraction(0)
    if comp.length >= 2 and comp[0] <= a - 1 and comp[1] >= a + b:
        k1, k2 = comp[0], comp[1]
        return Fraction(k2 - a - b) + Fraction(k2 - k1, k2 - 1)
    return Fraction(surplus(comp, a + b))


def kpc_eI(a: int, b: int, c: int) -> EIExpansion:
    """X of P^b(K_a, C_c), order a+b+c-1."""

    if a < 1 or b < 0 or c < 2:
        raise ValueError(f"KPC needs a >= 1, b >= 0, c >= 2, got a={a}, b={b}, c={c}")
    n = a + b + c - 1
    scale = factorial(a - 1)
    terms = {comp: scale * kpc_coefficient(comp, a, b) * w_weight(comp) for comp in compositions_of(n)}
    return _check_integral(EIExpansion(n, terms), "kpc")


@dataclass(frozen=True)
class FWeights:
    """Scalar parts of f_1, f_2, f_3 for a composition I and an integer a."""

    f1: int
    f2: int
    f3: int

    @property
    def balance(self) -> int:
        return self.f1 - self.f2 - self.f3


def f_weights(comp: Composition, a: int) -> FWeights:
    if comp.length < 1:
        raise ValueError("f-weights need a nonempty composition")
    last = comp[-1]
    w_rest = w_weight(comp.without(-1))
    return FWeights(
        f1=(a - 1) * w_weight(comp),
        f2=(a - 2) * last * w_rest,
        f3=(last - a + 1) * w_rest,
    )


def pkp_eI(g: int, h: int, m: int) -> EIExpansion:
    """X of K_m with tails g and h at two distinct vertices, order g+h+m."""

    if g < 0 or h < 0 or m < 2:
        raise ValueError(f"PKP needs g, h >= 0 and m >= 2, got g={g}, h={h}, m={m}")
    n = g + h + m
    scale = factorial(m - 2)
    terms: dict[Composition, Fraction] = {Composition.of(n): Fraction(scale * (m - 1))}
    for comp in compositions_of(n):
        weights = f_weights(comp, m)
        coeff = 0
        if surplus(comp, h + 1) >= m - 1:
            coeff += weights.f2
        if comp[-1] >= m - 1:
            coeff += weights.f3
        if coeff:
            terms[comp] = terms.get(comp, Fraction(0)) + scale * coeff
    return EIExpansion(n, terms)


def kkp_eI(a: int, b: int, c: int) -> EIExpansion:
    """X of K_{b+1}^{0a}(K_c, K_1), order a+b+c."""

    if a < 0 or b < 1 or c < 1:
        raise ValueError(f"KKP needs a >= 0, b >= 1, c >= 1, got a={a}, b={b}, c={c}")
    n = a + b + c
    scale = factorial(b - 1) * factorial(c - 1)
    low, high = min(b - 1, c - 1), max(b + 1, c)
    terms: dict[Composition, Fraction] = {}
    for comp in compositions_of(n):
        last = comp[-1]
        coeff = 0
        if last >= b + c:
            coeff += b * w_weight(comp)
        if comp.length >= 2 and last + comp[-2] >= b + c and (last <= low or high <= last <= b + c - 1):
            coeff += abs(b - last) * w_weight(comp.without(-1))
        if coeff:
            terms[comp] = Fraction(scale * coeff)
    return EIExpansion(n, terms)

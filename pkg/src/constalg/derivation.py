"""Problem instances and the derivation they induce.

An instance fixes d and nonconstant univariate polynomials f_1(x_1), ...,
f_d(x_d); the induced derivation of ring A sends x_i to 0 and y_i to
f_i(x_i) and is extended by linearity and the Leibniz rule.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InstanceError, RingMismatchError
from .poly import AMonomial, Polynomial, Ring, ring_a, ring_p


def _coefficient_from_json(value) -> Fraction:
    if isinstance(value, bool):
        raise InstanceError(f"coefficient {value!r} is not an exact rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InstanceError(f"bad rational literal {value!r}") from exc
    raise InstanceError(
        f"coefficient {value!r} must be an integer or a rational string like '3/2'"
    )


@dataclass(frozen=True)
class ProblemInstance:
    """d plus the coefficient vectors of f_1..f_d (ascending degree, trimmed).

    Every f_i must be nonconstant: zero or constant f_i make the algebra
    of constants degenerate and are rejected at construction.
    """

    d: int
    f: tuple[tuple[Fraction, ...], ...]

    @property
    def m(self) -> tuple[int, ...]:
        """Degrees m_i = deg f_i."""
        return tuple(len(fi) - 1 for fi in self.f)

    @property
    def lc(self) -> tuple[Fraction, ...]:
        """Leading coefficients of the f_i."""
        return tuple(fi[-1] for fi in self.f)

    @property
    def ring_a(self) -> Ring:
        return ring_a(self.d)

    @property
    def ring_p(self) -> Ring:
        return ring_p(self.d)

    @staticmethod
    def from_coeffs(d, coeff_lists) -> "ProblemInstance":
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise InstanceError(f"d must be a positive integer, got {d!r}")
        coeff_lists = list(coeff_lists)
        if len(coeff_lists) != d:
            raise InstanceError(
                f"expected {d} coefficient vectors, got {len(coeff_lists)}"
            )
        rows = []
        for i, raw in enumerate(coeff_lists, start=1):
            coeffs = [Fraction(c) for c in raw]
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            if not coeffs:
                raise InstanceError(f"f_{i} is the zero polynomial")
            if len(coeffs) == 1:
                raise InstanceError(f"f_{i} is constant; every f_i must have degree >= 1")
            rows.append(tuple(coeffs))
        return ProblemInstance(d, tuple(rows))

    @staticmethod
    def from_json_dict(data) -> "ProblemInstance":
        if not isinstance(data, dict):
            raise InstanceError("instance file must contain a JSON object")
        if "d" not in data or "f" not in data:
            raise InstanceError("instance file needs fields 'd' and 'f'")
        d = data["d"]
        if not isinstance(d, int) or isinstance(d, bool):
            raise InstanceError(f"field 'd' must be an integer, got {d!r}")
        f = data["f"]
        if not isinstance(f, list) or not all(isinstance(fi, list) for fi in f):
            raise InstanceError("field 'f' must be a list of coefficient lists")
        coeffs = [[_coefficient_from_json(c) for c in fi] for fi in f]
        return ProblemInstance.from_coeffs(d, coeffs)

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "f": [[str(c) for c in fi] for fi in self.f],
        }

    def f_polynomial(self, i: int) -> Polynomial:
        """f_i(x_i) as an element of ring A; i is 1-based."""
        if not (1 <= i <= self.d):
            raise ValueError(f"index {i} out of range 1..{self.d}")
        return _f_polynomial_a(self, i)


def load_instance(path) -> ProblemInstance:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise InstanceError(f"cannot read instance file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InstanceError(f"instance file is not valid JSON: {exc}") from exc
    return ProblemInstance.from_json_dict(data)


@lru_cache(maxsize=4096)
def _f_polynomial_a(inst: ProblemInstance, i: int) -> Polynomial:
    ring = inst.ring_a
    terms = {}
    for power, coeff in enumerate(inst.f[i - 1]):
        if coeff:
            xexp = tuple(power if t == i - 1 else 0 for t in range(inst.d))
            terms[AMonomial(xexp, (0,) * inst.d)] = coeff
    return Polynomial(ring, terms)


@dataclass(frozen=True)
class Derivation:
    """The derivation with x_i -> 0 and y_i -> f_i(x_i)."""

    instance: ProblemInstance

    def __call__(self, g: Polynomial) -> Polynomial:
        return apply_delta(self.instance, g)


def apply_delta(inst: ProblemInstance, g: Polynomial) -> Polynomial:
    """Image of g under the derivation, term by term via the Leibniz rule.

    For a monomial x^a y^b the image is sum_i b_i * x^a y^(b - e_i) * f_i(x_i).
    """
    if g.ring != inst.ring_a:
        raise RingMismatchError(f"polynomial over {g.ring} does not match d={inst.d}")
    d = inst.d
    terms: dict = {}
    for mono, coeff in g.terms.items():
        for i in range(d):
            bi = mono.yexp[i]
            if not bi:
                continue
            yexp = list(mono.yexp)
            yexp[i] -= 1
            base_factor = coeff * bi
            for power, fc in enumerate(inst.f[i]):
                if not fc:
                    continue
                xexp = list(mono.xexp)
                xexp[i] += power
                target = AMonomial(tuple(xexp), tuple(yexp))
                new = terms.get(target, 0) + base_factor * fc
                if new:
                    terms[target] = new
                else:
                    terms.pop(target, None)
    return Polynomial(inst.ring_a, terms)


def is_constant(inst: ProblemInstance, g: Polynomial) -> bool:
    """True iff the derivation annihilates g."""
    return apply_delta(inst, g).is_zero()


def _univariate_coeffs(inst: ProblemInstance, i: int, g: Polynomial) -> list[Fraction]:
    """Coefficient list of g, which must involve no variable besides x_i."""
    coeffs: list[Fraction] = []
    for mono, coeff in g.terms.items():
        if any(mono.yexp) or any(e and t != i - 1 for t, e in enumerate(mono.xexp)):
            raise ValueError(
                f"polynomial must be univariate in x{i}, got term {mono!r}"
            )
        power = mono.xexp[i - 1]
        if power >= len(coeffs):
            coeffs.extend([Fraction(0)] * (power + 1 - len(coeffs)))
        coeffs[power] = coeff
    return coeffs


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    """Quotient and remainder of univariate coefficient lists (ascending)."""
    num = list(num)
    dm = len(den) - 1
    dlc = den[-1]
    quot = [Fraction(0)] * max(len(num) - dm, 0)
    while len(num) - 1 >= dm and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dm:
            break
        shift = len(num) - 1 - dm
        factor = num[-1] / dlc
        quot[shift] = factor
        for t, dc in enumerate(den):
            num[shift + t] -= factor * dc
    while num and num[-1] == 0:
        num.pop()
    return quot, num


def f_adic_expand(inst: ProblemInstance, i: int, g: Polynomial) -> list[Polynomial]:
    """Write g = sum_n q_n(x_i) * f_i(x_i)^n with every deg q_n < deg f_i.

    g must be a polynomial in x_i alone; the list [q_0, q_1, ...] is
    returned positionally, so inner quotients that happen to vanish stay
    in place.  Computed by repeated Euclidean division by f_i.
    """
    if not (1 <= i <= inst.d):
        raise ValueError(f"index {i} out of range 1..{inst.d}")
    if g.ring != inst.ring_a:
        raise RingMismatchError(f"polynomial over {g.ring} does not match d={inst.d}")
    remainder = _univariate_coeffs(inst, i, g)
    fi = list(inst.f[i - 1])
    layers: list[list[Fraction]] = []
    while any(remainder):
        quot, rem = _poly_divmod(remainder, fi)
        layers.append(rem)
        remainder = quot
    if not layers:
        layers.append([])
    ring = inst.ring_a
    out = []
    for layer in layers:
        terms = {}
        for power, coeff in enumerate(layer):
            if coeff:
                xexp = tuple(power if t == i - 1 else 0 for t in range(inst.d))
                terms[AMonomial(xexp, (0,) * inst.d)] = coeff
        out.append(Polynomial(ring, terms))
    return out

"""Integer polynomials in one indeterminate q"""
from __future__ import annotations

from dataclasses import dataclass

import sympy

q = sympy.Symbol('q')


def _as_poly(expr) -> sympy.Poly:
    return sympy.Poly(expr, q, domain=sympy.ZZ)


@dataclass(frozen=True)
class QPolynomial:
    """A value wrapper over sympy.Poly in q with integer coefficients"""
    poly: sympy.Poly

    def __post_init__(self):
        if not isinstance(self.poly, sympy.Poly):
            object.__setattr__(self, 'poly', _as_poly(self.poly))

    @classmethod
    def zero(cls) -> QPolynomial:
        return cls(_as_poly(0))

    @classmethod
    def constant(cls, c: int) -> QPolynomial:
        return cls(_as_poly(c))

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> QPolynomial:
        return cls(_as_poly(c * q ** exponent))

    @classmethod
    def from_coeffs(cls, coeffs) -> QPolynomial:
        """coeffs[e] is the coefficient of q^e"""
        return cls.from_dict(dict(enumerate(coeffs)))

    @classmethod
    def from_dict(cls, terms) -> QPolynomial:
        monomials = {(int(e),): int(c) for e, c in terms.items() if int(c)}
        if not monomials:
            return cls.zero()
        return cls(sympy.Poly.from_dict(monomials, q, domain=sympy.ZZ))

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Ascending coefficients with trailing zeros dropped"""
        if self.poly.is_zero:
            return ()
        return tuple(int(c) for c in reversed(self.poly.all_coeffs()))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        return QPolynomial(self.poly + _coerce(other).poly)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-self.poly)

    def __sub__(self, other):
        return QPolynomial(self.poly - _coerce(other).poly)

    def __mul__(self, other):
        return QPolynomial(self.poly * _coerce(other).poly)

    __rmul__ = __mul__

    def shift(self, k: int) -> QPolynomial:
        """Multiply by q^k"""
        return QPolynomial(self.poly * _as_poly(q ** k))

    def __call__(self, value):
        return int(self.poly.eval(value))

    def to_dict(self) -> dict[str, int]:
        return {str(e): c for e, c in enumerate(self.coeffs) if c}

    def __str__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
                continue
            power = 'q' if e == 1 else f'q^{e}'
            if c in (1, -1):
                terms.append(power if c == 1 else '-' + power)
            else:
                terms.append(f'{c}*{power}')
        if not terms:
            return '0'
        return ' + '.join(terms).replace('+ -', '- ')


def _coerce(value) -> QPolynomial:
    if isinstance(value, QPolynomial):
        return value
    return QPolynomial.constant(value)

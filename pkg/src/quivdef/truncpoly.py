"""Truncated multivariate polynomials over Q.

TruncPoly models Q[[u_1,...,u_m]] / m^(N+1): a polynomial in m named
parameters where every term of total degree greater than the order N is
discarded.  Coefficients are Fractions, exponent tuples are stored sparsely
and never with a zero coefficient.  Terms are ordered by total degree then
lexicographically, which fixes the serialized form.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import ZERO, fmt_fraction, fr


class TruncPoly:
    __slots__ = ("variables", "order", "coeffs")

    def __init__(self, variables, order, coeffs=None):
        self.variables = tuple(variables)
        self.order = int(order)
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        clean = {}
        for mono, c in (coeffs or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != len(self.variables):
                raise ValueError("exponent tuple has wrong length")
            if any(e < 0 for e in mono):
                raise ValueError("negative exponent")
            if sum(mono) > self.order:
                continue
            c = fr(c)
            if c:
                clean[mono] = clean.get(mono, ZERO) + c
                if not clean[mono]:
                    del clean[mono]
        self.coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables, order):
        return cls(variables, order)

    @classmethod
    def const(cls, c, variables, order):
        m = len(tuple(variables))
        return cls(variables, order, {(0,) * m: fr(c)})

    @classmethod
    def monomial(cls, variables, order, exponents, c=1):
        return cls(variables, order, {tuple(exponents): fr(c)})

    @classmethod
    def variable(cls, variables, order, name):
        variables = tuple(variables)
        i = variables.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, order, {exp: fr(1)})

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.variables != other.variables or self.order != other.order:
            raise ValueError("mismatched variable lists or orders")

    def __add__(self, other):
        if not isinstance(other, TruncPoly):
            other = TruncPoly.const(other, self.variables, self.order)
        self._check(other)
        coeffs = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            coeffs[mono] = coeffs.get(mono, ZERO) + c
        return TruncPoly(self.variables, self.order, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return TruncPoly(
            self.variables, self.order, {m: -c for m, c in self.coeffs.items()}
        )

    def __sub__(self, other):
        if not isinstance(other, TruncPoly):
            other = TruncPoly.const(other, self.variables, self.order)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncPoly):
            c = fr(other)
            return TruncPoly(
                self.variables, self.order, {m: c * x for m, x in self.coeffs.items()}
            )
        self._check(other)
        out = {}
        N = self.order
        for m1, c1 in self.coeffs.items():
            d1 = sum(m1)
            for m2, c2 in other.coeffs.items():
                if d1 + sum(m2) > N:
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                c = out.get(m, ZERO) + c1 * c2
                if c:
                    out[m] = c
                else:
                    del out[m]
        return TruncPoly(self.variables, self.order, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = TruncPoly.const(1, self.variables, self.order)
        for _ in range(int(k)):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncPoly):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.variables, self.order, tuple(sorted(self.coeffs.items()))))

    def __bool__(self):
        return bool(self.coeffs)

    # -- inspection --------------------------------------------------------

    def coefficient(self, exponents) -> Fraction:
        return self.coeffs.get(tuple(exponents), ZERO)

    def constant_term(self) -> Fraction:
        return self.coeffs.get((0,) * len(self.variables), ZERO)

    def sorted_terms(self):
        """Terms ordered by total degree, then lexicographic exponents."""
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for mono, c in self.sorted_terms():
            factors = [fmt_fraction(c)] if (c != 1 or not any(mono)) else []
            for name, e in zip(self.variables, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            bits.append("*".join(factors))
        return " + ".join(bits)

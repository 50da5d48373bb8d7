"""Sparse exact-integer polynomials in x, y (bivariate) and y (univariate).

Coefficients are Python ints, so Mobius numbers that grow factorially
stay exact. Zero coefficients are never stored; two polynomials are
equal iff their coefficient maps are equal.
"""

from __future__ import annotations


def _prune(coeffs):
    return {k: c for k, c in coeffs.items() if c != 0}


class BivariatePolynomial:
    """Integer polynomial in x and y, stored as {(x_deg, y_deg): coeff}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = _prune(coeffs) if coeffs else {}

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    def _coerce(self, other):
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, int):
            return BivariatePolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def shift(self, dx, dy):
        """Multiply by x**dx * y**dy."""
        return BivariatePolynomial({(i + dx, j + dy): c for (i, j), c in self.coeffs.items()})

    def partial_x(self):
        return BivariatePolynomial({(i - 1, j): c * i for (i, j), c in self.coeffs.items() if i > 0})

    def partial_y(self):
        return BivariatePolynomial({(i, j - 1): c * j for (i, j), c in self.coeffs.items() if j > 0})

    def eval(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.coeffs.items())

    def substitute_y(self, value) -> "UnivariatePolynomial":
        """Plug a value in for y, leaving a polynomial in x."""
        out = {}
        for (i, j), c in self.coeffs.items():
            out[i] = out.get(i, 0) + c * value**j
        return UnivariatePolynomial(out, "x")

    def coefficients_of_x(self, i) -> "UnivariatePolynomial":
        """The y-polynomial multiplying x**i."""
        return UnivariatePolynomial({j: c for (xd, j), c in self.coeffs.items() if xd == i})

    def to_triples(self):
        """Serialized form: (x_deg, y_deg, coeff) sorted lexicographically."""
        return [(i, j, self.coeffs[(i, j)]) for i, j in sorted(self.coeffs)]

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        return _render(sorted(self.coeffs.items(), reverse=True), _bi_monomial)

    def __repr__(self):
        return f"BivariatePolynomial({self.coeffs!r})"


class UnivariatePolynomial:
    """Integer polynomial in one variable, stored as {degree: coeff}.

    The variable name is display-only; equality compares coefficients.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=None, var="y"):
        self.coeffs = _prune(coeffs) if coeffs else {}
        self.var = var

    @classmethod
    def constant(cls, c, var="y"):
        return cls({0: c}, var)

    @classmethod
    def from_roots(cls, roots):
        """The monic polynomial with the given integer roots (with multiplicity)."""
        poly = cls({0: 1})
        for r in roots:
            poly = poly * cls({1: 1, 0: -r})
        return poly

    @property
    def degree(self):
        return max(self.coeffs, default=0)

    def is_monic(self):
        return self.coeffs.get(self.degree, 0) == 1

    def _coerce(self, other):
        if isinstance(other, UnivariatePolynomial):
            return other
        if isinstance(other, int):
            return UnivariatePolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return UnivariatePolynomial(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePolynomial({k: -c for k, c in self.coeffs.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return UnivariatePolynomial(out, self.var)

    __rmul__ = __mul__

    def eval(self, v):
        return sum(c * v**d for d, c in self.coeffs.items())

    def to_pairs(self):
        """Serialized form: (degree, coeff) pairs sorted by degree."""
        return [(d, self.coeffs[d]) for d in sorted(self.coeffs)]

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        return _render(sorted(self.coeffs.items(), reverse=True),
                       lambda d: _power(self.var, d))

    def __repr__(self):
        return f"UnivariatePolynomial({self.coeffs!r}, var={self.var!r})"


def _power(var, d):
    if d == 0:
        return ""
    if d == 1:
        return var
    return f"{var}^{d}"

def _bi_monomial(key):
    i, j = key
    parts = [p for p in (_power("x", i), _power("y", j)) if p]
    return "*".join(parts)

def _render(items, monomial):
    if not items:
        return "0"
    chunks = []
    for key, c in items:
        mono = monomial(key)
        mag = abs(c)
        body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(chunks)


ONE = BivariatePolynomial.constant(1)
UNI_ONE = UnivariatePolynomial.constant(1)

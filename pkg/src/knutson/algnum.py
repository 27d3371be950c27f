"""Exact arithmetic for character values.

Two independent systems, each closed under exactly the operations its
tables need:

* MultiQuadratic -- Q-linear combinations of square roots of squarefree
  integers (radicand 1 is the rational part, negative radicands are
  allowed and mean i*sqrt(|d|)).  Carries the split character values of
  alternating groups.

* CyclotomicTau -- elements a + b*tau of Q(zeta_m)[tau] with tau^2 a
  fixed integer (eps * q for the SL2 tables).  The zeta components are
  held as sparse exponent -> coefficient maps and reduced against the
  m-th cyclotomic polynomial only when equality or zero-ness is decided.
  tau is adjoined formally; complex conjugation sends zeta to zeta^(m-1)
  and tau to sign(tau^2) * tau.

Plain int and fractions.Fraction mix freely with both via the arithmetic
dunders, and the module-level helpers (conj_value, value_is_zero,
approx_value, rational_value) dispatch over all four kinds.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import cache
from math import gcd
Rational = Fraction

_RATIONAL_TYPES = (int, Fraction)


def squarefree_decompose(n: int) -> tuple[int, int]:
    """n = g*g*d with d squarefree (d keeps the sign of n); returns (g, d)."""
    if n == 0:
        raise ValueError("radicand must be nonzero")
    sign = 1 if n > 0 else -1
    n = abs(n)
    g, d = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            g *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= n
    return g, sign * d


def _mul_radicals(d1: int, d2: int) -> tuple[int, int]:
    """sqrt(d1)*sqrt(d2) = g*sqrt(d3) under the principal branch.

    Negative radicands mean i*sqrt(|d|), so two negatives contribute an
    extra factor of -1.
    """
    g, d3 = squarefree_decompose(abs(d1 * d2))
    if d1 < 0 and d2 < 0:
        g = -g
    elif (d1 < 0) != (d2 < 0):
        d3 = -d3
    return g, d3


class MultiQuadratic:
    """Finite Q-linear combination of sqrt(d) for squarefree integers d."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, Fraction] | None = None):
        self.coeffs = {d: c for d, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def from_rational(cls, r) -> "MultiQuadratic":
        return cls({1: Fraction(r)})

    @classmethod
    def sqrt(cls, n: int, scale=1) -> "MultiQuadratic":
        """scale * sqrt(n) for any nonzero integer n."""
        g, d = squarefree_decompose(n)
        if d == 1:
            return cls({1: Fraction(scale) * g})
        return cls({d: Fraction(scale) * g})

    def _coerce(self, other):
        if isinstance(other, MultiQuadratic):
            return other
        if isinstance(other, _RATIONAL_TYPES):
            return MultiQuadratic.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for d, c in o.coeffs.items():
            out[d] = out.get(d, Fraction(0)) + c
        return MultiQuadratic(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiQuadratic({d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in o.coeffs.items():
                if d1 == 1:
                    g, d3 = 1, d2
                elif d2 == 1:
                    g, d3 = 1, d1
                elif d1 == d2:
                    g, d3 = d1, 1
                else:
                    g, d3 = _mul_radicals(d1, d2)
                out[d3] = out.get(d3, Fraction(0)) + c1 * c2 * g
        return MultiQuadratic(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def conj(self) -> "MultiQuadratic":
        """Complex conjugation: fixes real radicands, negates imaginary ones."""
        return MultiQuadratic(
            {d: (-c if d < 0 else c) for d, c in self.coeffs.items()}
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return set(self.coeffs) <= {1}

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return self.coeffs.get(1, Fraction(0))

    def approx(self) -> complex:
        return sum(
            (complex(c) * cmath.sqrt(d) for d, c in self.coeffs.items()),
            complex(0),
        )

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d in sorted(self.coeffs):
            c = self.coeffs[d]
            terms.append(str(c) if d == 1 else f"{c}*sqrt({d})")
        return " + ".join(terms)


@cache
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, low degree first."""
    if m < 1:
        raise ValueError("m must be positive")
    # x^m - 1 divided by Phi_d for every proper divisor d.
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _exact_poly_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _exact_poly_div(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (low degree first)."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c == 0:
            continue
        q, r = divmod(c, den[dd])
        if r:
            raise ArithmeticError("polynomial division not exact")
        out[k - dd] = q
        for i, dc in enumerate(den):
            num[k - dd + i] -= q * dc
    if any(num):
        raise ArithmeticError("polynomial division not exact")
    return out


@cache
def _power_table(m: int) -> list[tuple[int, ...]]:
    """x^k mod Phi_m for 0 <= k < m, as integer vectors of length phi(m)."""
    phi = list(cyclotomic_polynomial(m))
    deg = len(phi) - 1
    rows: list[tuple[int, ...]] = []
    cur = [0] * deg
    if deg > 0:
        cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        lead = cur[-1] if deg > 0 else 0
        cur = [0] + cur[:-1]
        if lead:
            # subtract lead * x^deg = lead * (-(phi minus leading term))
            for i in range(deg):
                cur[i] += lead * -phi[i]
        # degree-0 field Q (m=1): nothing to track
    return rows


def _canonical(m: int, comp: dict[int, Fraction]) -> tuple[Fraction, ...]:
    table = _power_table(m)
    deg = len(table[0]) if table else 0
    if not comp:
        return (Fraction(0),) * deg
    # Scale to a common denominator so the accumulation is pure-int.
    den = 1
    for c in comp.values():
        den = den * c.denominator // gcd(den, c.denominator)
    out = [0] * deg
    for e, c in comp.items():
        k = c.numerator * (den // c.denominator)
        if k == 0:
            continue
        row = table[e % m]
        for i, r in enumerate(row):
            if r:
                out[i] += k * r
    return tuple(Fraction(v, den) for v in out)


class CyclotomicTau:
    """a + b*tau with a, b in Q(zeta_m) and tau^2 = tau_sq (an integer).

    tau_sq = 0 marks a table without the quadratic element (even q);
    the tau component is then identically empty.
    """

    __slots__ = ("m", "tau_sq", "base", "tau")

    def __init__(self, m: int, tau_sq: int, base=None, tau=None):
        self.m = m
        self.tau_sq = tau_sq
        self.base = {e % m: Fraction(c) for e, c in (base or {}).items() if c != 0}
        self.tau = {e % m: Fraction(c) for e, c in (tau or {}).items() if c != 0}
        if tau_sq == 0 and self.tau:
            raise ValueError("tau component without a tau^2 relation")

    @classmethod
    def rational(cls, m: int, tau_sq: int, r) -> "CyclotomicTau":
        return cls(m, tau_sq, {0: Fraction(r)})

    @classmethod
    def root_of_unity(cls, m: int, k: int, tau_sq: int = 0) -> "CyclotomicTau":
        return cls(m, tau_sq, {k % m: Fraction(1)})

    @classmethod
    def tau_element(cls, m: int, tau_sq: int, scale=1) -> "CyclotomicTau":
        return cls(m, tau_sq, None, {0: Fraction(scale)})

    def _coerce(self, other):
        if isinstance(other, CyclotomicTau):
            if other.m != self.m or other.tau_sq != self.tau_sq:
                raise ValueError(
                    "mixed cyclotomic contexts: "
                    f"({self.m},{self.tau_sq}) vs ({other.m},{other.tau_sq})"
                )
            return other
        if isinstance(other, _RATIONAL_TYPES):
            return CyclotomicTau.rational(self.m, self.tau_sq, other)
        return None

    @staticmethod
    def _dadd(a, b, sign=1):
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, Fraction(0)) + sign * c
        return out

    def _dmul(self, a, b):
        out: dict[int, Fraction] = {}
        m = self.m
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = (e1 + e2) % m
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return out

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicTau(
            self.m, self.tau_sq,
            self._dadd(self.base, o.base), self._dadd(self.tau, o.tau),
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicTau(
            self.m, self.tau_sq,
            {e: -c for e, c in self.base.items()},
            {e: -c for e, c in self.tau.items()},
        )

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        base = self._dmul(self.base, o.base)
        if self.tau and o.tau:
            tt = self._dmul(self.tau, o.tau)
            base = self._dadd(base, {e: c * self.tau_sq for e, c in tt.items()})
        tau: dict[int, Fraction] = {}
        if o.tau:
            tau = self._dadd(tau, self._dmul(self.base, o.tau))
        if self.tau:
            tau = self._dadd(tau, self._dmul(self.tau, o.base))
        return CyclotomicTau(self.m, self.tau_sq, base, tau)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            inv = Fraction(1) / Fraction(other)
            return CyclotomicTau(
                self.m, self.tau_sq,
                {e: c * inv for e, c in self.base.items()},
                {e: c * inv for e, c in self.tau.items()},
            )
        return NotImplemented

    def conj(self) -> "CyclotomicTau":
        m = self.m
        eps = 0 if self.tau_sq == 0 else (1 if self.tau_sq > 0 else -1)
        return CyclotomicTau(
            m, self.tau_sq,
            {(m - e) % m: c for e, c in self.base.items()},
            {(m - e) % m: eps * c for e, c in self.tau.items()},
        )

    def canonical(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """Components reduced mod Phi_m: vectors of length phi(m)."""
        return _canonical(self.m, self.base), _canonical(self.m, self.tau)

    def is_zero(self) -> bool:
        cb, ct = self.canonical()
        return not any(cb) and not any(ct)

    def is_rational(self) -> bool:
        cb, ct = self.canonical()
        return not any(ct) and not any(cb[1:])

    def rational_value(self) -> Fraction:
        cb, ct = self.canonical()
        if any(ct) or any(cb[1:]):
            raise ValueError("not a rational value")
        return cb[0] if cb else Fraction(0)

    def approx(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.m)
        out = sum((complex(c) * z**e for e, c in self.base.items()), complex(0))
        if self.tau:
            t = cmath.sqrt(self.tau_sq)
            out += t * sum(
                (complex(c) * z**e for e, c in self.tau.items()), complex(0)
            )
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    def __hash__(self):
        cb, ct = self.canonical()
        return hash((self.m, self.tau_sq, cb, ct))

    def __repr__(self):
        def fmt(comp, suffix=""):
            return " + ".join(
                f"{c}*z{self.m}^{e}{suffix}" for e, c in sorted(comp.items())
            )

        parts = [s for s in (fmt(self.base), fmt(self.tau, "*tau")) if s]
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# generic value helpers (plain rationals mix with both exact systems)

def conj_value(x):
    if isinstance(x, _RATIONAL_TYPES):
        return x
    return x.conj()


def value_is_zero(x) -> bool:
    if isinstance(x, _RATIONAL_TYPES):
        return x == 0
    return x.is_zero()


def rational_value(x) -> Fraction:
    """Exact rational content of a value; raises if it is irrational."""
    if isinstance(x, _RATIONAL_TYPES):
        return Fraction(x)
    return x.rational_value()


def approx_value(x) -> complex:
    if isinstance(x, _RATIONAL_TYPES):
        return complex(x)
    return x.approx()


def values_equal(x, y) -> bool:
    if isinstance(x, _RATIONAL_TYPES) and isinstance(y, _RATIONAL_TYPES):
        return x == y
    if isinstance(x, _RATIONAL_TYPES):
        x, y = y, x
    return x == y

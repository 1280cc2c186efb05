"""Exact Laurent polynomials in q and balanced quantum combinatorics.

Everything here is integer-exact: coefficients are arbitrary-precision
ints and the quantum integers/binomials use the balanced (symmetric in
q <-> q^-1) convention, so quantum binomials with nonnegative arguments
are palindromic with nonnegative coefficients.
"""

from __future__ import annotations

import functools


class LaurentPoly:
    """A sparse integer Laurent polynomial in one variable q.

    Stored as a dict mapping exponent -> nonzero coefficient.  Instances
    are treated as immutable; all arithmetic returns new objects.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    data[int(e)] = int(c)
        self.coeffs = data

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def monomial(exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return LaurentPoly({exponent: coefficient})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of a polynomial are not defined")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by q^d."""
        return LaurentPoly({e + d: c for e, c in self.coeffs.items()})

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def min_degree(self) -> int:
        return min(self.coeffs)

    def max_degree(self) -> int:
        return max(self.coeffs)

    def divides_monomial(self, other: "LaurentPoly"):
        """If other == m * self for a monomial m = c*q^d, return (d, c), else None."""
        if self.is_zero() or other.is_zero():
            return None
        d = other.min_degree() - self.min_degree()
        lead = other.coeffs[other.min_degree()]
        base = self.coeffs[self.min_degree()]
        if lead % base:
            return None
        c = lead // base
        if self.shift(d) * c == other:
            return (d, c)
        return None

    def to_json_obj(self) -> dict:
        return {str(e): c for e, c in sorted(self.coeffs.items())}

    @staticmethod
    def from_json_obj(obj) -> "LaurentPoly":
        if not isinstance(obj, dict):
            raise ValueError("LaurentPoly JSON must be an object")
        return LaurentPoly({int(e): int(c) for e, c in obj.items()})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c}")
            else:
                mono = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def quantum_int(k: int) -> LaurentPoly:
    """The balanced quantum integer [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}.

    Satisfies [0] = 0 and [-k] = -[k].
    """
    if k < 0:
        return -quantum_int(-k)
    return LaurentPoly({k - 1 - 2 * i: 1 for i in range(k)})


def quantum_factorial(k: int) -> LaurentPoly:
    """[k]! = [k][k-1]...[1], with [0]! = 1."""
    if k < 0:
        raise ValueError("quantum factorial needs k >= 0")
    out = LaurentPoly.one()
    for i in range(2, k + 1):
        out = out * quantum_int(i)
    return out


@functools.lru_cache(maxsize=None)
def quantum_binomial(a: int, b: int) -> LaurentPoly:
    """The balanced quantum binomial coefficient [a choose b].

    For a >= b >= 0 this is the palindromic Gaussian binomial; for
    0 <= a < b it is 0; for a < 0 it is defined through the signed
    identity [a choose b] = (-1)^b [b-a-1 choose b], which extends the
    q-Pascal recursion to all integer upper arguments.
    """
    if b < 0:
        raise ValueError("quantum binomial needs b >= 0")
    if a < 0:
        body = quantum_binomial(-a + b - 1, b)
        return -body if b % 2 else body
    if b == 0:
        return LaurentPoly.one()
    if b > a:
        return LaurentPoly.zero()
    # q-Pascal: [a,b] = q^b [a-1,b] + q^{b-a} [a-1,b-1]
    return quantum_binomial(a - 1, b).shift(b) + quantum_binomial(a - 1, b - 1).shift(b - a)


def eval_at_one(p: LaurentPoly) -> int:
    """Specialize q = 1, i.e. sum all coefficients."""
    return sum(p.coeffs.values())

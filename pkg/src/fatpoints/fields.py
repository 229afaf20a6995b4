"""Exact coefficient fields for coordinate geometry: Q, F_p, and small
GF(p^k).

Rank computations only ever need field arithmetic, so fields expose a
tiny protocol (add/sub/mul/inv/from_int) over int-encoded elements.
Rational points are kept as primitive integer triples, which lets the
rational path run on plain integer fraction-free elimination.  Extension
fields encode a polynomial c_0 + c_1 x + ... as the integer
sum(c_i * p^i) and use precomputed tables; they exist because some
configurations forced into characteristic 2 need more than the 7 points
of the plane over F_2.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import GeometryError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Rationals:
    """The rational field; elements handled as Fractions or ints."""

    kind = "Q"
    char = 0

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def to_json(self):
        return {"kind": "Q"}

    @staticmethod
    def parse_coord(text: str) -> Fraction:
        return Fraction(text)

    @staticmethod
    def coord_str(value) -> str:
        return str(value)


class PrimeField:
    """F_p for a prime p < 2^31; elements are ints in 0..p-1."""

    kind = "Fp"

    def __init__(self, p: int):
        if not _is_prime(p) or p >= 1 << 31:
            raise GeometryError(f"{p} is not a supported prime")
        self.p = p
        self.char = p
        self.order = p
        self.zero = 0
        self.one = 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, n):
        return pow(a, n, self.p) if n >= 0 else self.inv(pow(a, -n, self.p))

    def elements(self):
        return range(self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def to_json(self):
        return {"kind": "Fp", "p": self.p}

    def parse_coord(self, text: str) -> int:
        return int(text) % self.p

    @staticmethod
    def coord_str(value) -> str:
        return str(value)


def _poly_divmod(num, den, p):
    num = list(num)
    dd = len(den) - 1
    inv = pow(den[-1], p - 2, p)
    for i in range(len(num) - 1 - dd, -1, -1):
        c = num[i + dd] * inv % p
        if c:
            for j, d in enumerate(den):
                num[i + j] = (num[i + j] - c * d) % p
    return num[:dd]  # remainder coefficients


def _poly_irreducible(coeffs, p):
    """Trial division by all monic polynomials of degree <= deg/2."""
    deg = len(coeffs) - 1
    for d in range(1, deg // 2 + 1):
        for tail in range(p ** d):
            den = []
            n = tail
            for _ in range(d):
                den.append(n % p)
                n //= p
            den.append(1)
            if not any(_poly_divmod(coeffs, den, p)):
                return False
    return True


class GaloisField:
    """GF(p^k) for small p^k, with table-based arithmetic.

    An element sum(c_i x^i) is encoded as the integer sum(c_i p^i); the
    modulus is the first irreducible monic polynomial in lexicographic
    order, so encodings are reproducible.
    """

    kind = "Fq"
    _MAX_ORDER = 4096

    def __init__(self, p: int, k: int):
        if not _is_prime(p):
            raise GeometryError(f"{p} is not prime")
        if k < 2:
            raise GeometryError("use PrimeField for k = 1")
        q = p ** k
        if q > self._MAX_ORDER:
            raise GeometryError(f"GF({q}) exceeds the supported table size")
        self.p, self.k, self.order = p, k, q
        self.char = p
        self.zero, self.one = 0, 1
        self.modulus = self._find_modulus()
        self._mul = [[self._poly_mul(a, b) for b in range(q)] for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    def _find_modulus(self):
        p, k = self.p, self.k
        for tail in range(p ** k):
            coeffs = self._digits(tail, k) + [1]
            if _poly_irreducible(coeffs, p):
                return coeffs
        raise GeometryError("no irreducible modulus found")  # unreachable

    def _digits(self, n, k):
        out = []
        for _ in range(k):
            out.append(n % self.p)
            n //= self.p
        return out

    def _encode(self, digits):
        n = 0
        for d in reversed(digits):
            n = n * self.p + d
        return n

    def _poly_mul(self, a, b):
        p, k = self.p, self.k
        da, db = self._digits(a, k), self._digits(b, k)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce by the monic modulus
        for i in range(len(prod) - 1, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * self.modulus[j]) % p
        return self._encode(prod[:k])

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        da, db = self._digits(a, self.k), self._digits(b, self.k)
        return self._encode([(x + y) % self.p for x, y in zip(da, db)])

    def sub(self, a, b):
        da, db = self._digits(a, self.k), self._digits(b, self.k)
        return self._encode([(x - y) % self.p for x, y in zip(da, db)])

    def neg(self, a):
        return self._encode([(-x) % self.p for x in self._digits(a, self.k)])

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        out = 1
        while n:
            if n & 1:
                out = self._mul[out][a]
            a = self._mul[a][a]
            n >>= 1
        return out

    def elements(self):
        return range(self.order)

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return (isinstance(other, GaloisField)
                and (other.p, other.k) == (self.p, self.k))

    def __hash__(self):
        return hash(("Fq", self.p, self.k))

    def to_json(self):
        return {"kind": "Fq", "p": self.p, "k": self.k}

    def parse_coord(self, text: str) -> int:
        n = int(text)
        if not 0 <= n < self.order:
            raise GeometryError(f"coordinate {n} outside GF({self.order}) encoding range")
        return n

    @staticmethod
    def coord_str(value) -> str:
        return str(value)


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int, k: int = 1):
    return PrimeField(p) if k == 1 else GaloisField(p, k)


def field_from_json(data: dict):
    kind = data.get("kind")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return GF(int(data["p"]))
    if kind == "Fq":
        return GF(int(data["p"]), int(data["k"]))
    raise GeometryError(f"unknown field description {data!r}")


def normalise_rational_triple(coords) -> tuple[int, int, int]:
    """Scale a rational triple to a primitive integer triple with a
    positive leading nonzero entry."""
    fracs = [Fraction(c) for c in coords]
    if all(f == 0 for f in fracs):
        raise GeometryError("projective point cannot be the zero triple")
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)

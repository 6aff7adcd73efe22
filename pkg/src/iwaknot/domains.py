"""Exact coefficient domains for Laurent-polynomial arithmetic.

Supported domains:

* ``Integers``        -- arbitrary-precision rational integers (python int)
* ``Rationals``       -- exact rationals (fractions.Fraction)
* ``PrimeField(p)``   -- the field with p elements, elements stored as 0..p-1
* ``QuadraticField``  -- the field with p^2 elements, elements (a, b) = a + b*s
* ``QuadraticRing``   -- Z[sqrt(D)] or Z[(1+sqrt(D))/2], elements (a, b) = a + b*w

Every domain exposes the same small protocol (coerce/add/mul/...), so the
polynomial layer never needs to know which representation it is handling.
All elements are kept in a canonical form, so python ``==`` on raw element
values agrees with domain equality.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InexactDivision, NoSquareRoot, WrongDomain

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 2**64."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # This witness set is known to be deterministic below 2**64.
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class CoefficientDomain:
    """Abstract base; concrete domains fill in the element protocol."""

    kind = "abstract"
    is_field = False
    is_finite = False

    # -- element protocol ------------------------------------------------
    def coerce(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def exact_div(self, a, b):
        """a / b when b divides a exactly; raises InexactDivision otherwise."""
        raise NotImplementedError

    def power(self, a, k: int):
        if k < 0:
            return self.power(self.inv(a), -k)
        result, base = self.one, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    # -- presentation ----------------------------------------------------
    def format(self, a) -> str:
        return str(a)

    def parse(self, s: str):
        raise NotImplementedError

    def describe(self) -> dict:
        """JSON-serializable description of the domain."""
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, CoefficientDomain) and self.describe() == other.describe()

    def __hash__(self):
        return hash(tuple(sorted(self.describe().items())))

    def __repr__(self):
        return f"{type(self).__name__}({self.describe()})"


class Integers(CoefficientDomain):
    kind = "integers"

    def coerce(self, x):
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        raise WrongDomain(f"cannot coerce {x!r} into Z")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if not self.is_unit(a):
            raise InexactDivision(f"{a} is not a unit of Z")
        return a

    def exact_div(self, a, b):
        if b == 0:
            raise ZeroDivisionError
        q, r = divmod(a, b)
        if r:
            raise InexactDivision(f"{b} does not divide {a}")
        return q

    def parse(self, s):
        return int(s)

    def describe(self):
        return {"kind": self.kind}


class Rationals(CoefficientDomain):
    kind = "rationals"
    is_field = True

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise WrongDomain(f"cannot coerce {x!r} into Q")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        return 1 / Fraction(a)

    def exact_div(self, a, b):
        return Fraction(a) / b

    def parse(self, s):
        return Fraction(s)

    def describe(self):
        return {"kind": self.kind}


class PrimeField(CoefficientDomain):
    """F_p with elements canonically stored in range(p)."""

    kind = "prime_field"
    is_field = True
    is_finite = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise WrongDomain(f"{p} is not prime")
        self.p = p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self.mul(x.numerator % self.p, self.inv(x.denominator % self.p))
        raise WrongDomain(f"cannot coerce {x!r} into F_{self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}")
        return pow(a, -1, self.p)

    def exact_div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        return range(self.p)

    def sqrt(self, a):
        """A square root of a in F_p, or raise NoSquareRoot.  Brute force;
        the scans only use p <= a few hundred."""
        a %= self.p
        for s in range(self.p):
            if s * s % self.p == a:
                return s
        raise NoSquareRoot(f"{a} is not a square mod {self.p}")

    def parse(self, s):
        return int(s) % self.p

    def describe(self):
        return {"kind": self.kind, "p": self.p}


def smallest_nonresidue(p: int) -> int:
    if p == 2:
        raise WrongDomain("F_2 has no quadratic nonresidue")
    for n in range(2, p):
        if pow(n, (p - 1) // 2, p) == p - 1:
            return n
    raise WrongDomain(f"no nonresidue found mod {p}")  # unreachable for prime p


class QuadraticField(CoefficientDomain):
    """F_{p^2} = F_p[s] with s^2 = c*s + d.

    For odd p the modulus is s^2 = nonresidue; for p = 2 we take
    s^2 = s + 1 (there is no nonresidue mod 2).
    Elements are pairs (a, b) of reduced F_p values meaning a + b*s.
    """

    kind = "quadratic_field"
    is_field = True
    is_finite = True

    def __init__(self, p: int, nonresidue: int | None = None):
        if not is_prime(p):
            raise WrongDomain(f"{p} is not prime")
        self.p = p
        self.base = PrimeField(p)
        if p == 2:
            self.c, self.d = 1, 1
            self.nonresidue = None
        else:
            if nonresidue is None:
                nonresidue = smallest_nonresidue(p)
            if pow(nonresidue % p, (p - 1) // 2, p) != p - 1:
                raise WrongDomain(f"{nonresidue} is a residue mod {p}")
            self.c, self.d = 0, nonresidue % p
            self.nonresidue = self.d

    def coerce(self, x):
        if isinstance(x, tuple) and len(x) == 2:
            return (x[0] % self.p, x[1] % self.p)
        if isinstance(x, (int, Fraction)):
            return (self.base.coerce(x), 0)
        raise WrongDomain(f"cannot coerce {x!r} into F_{self.p}^2")

    def embed(self, a: int):
        return (a % self.p, 0)

    def in_base_field(self, x) -> bool:
        return x[1] == 0

    def add(self, a, b):
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def neg(self, a):
        return (-a[0] % self.p, -a[1] % self.p)

    def mul(self, a, b):
        # (a0 + a1 s)(b0 + b1 s) with s^2 = c s + d
        cross = a[0] * b[1] + a[1] * b[0]
        sq = a[1] * b[1]
        return ((a[0] * b[0] + sq * self.d) % self.p, (cross + sq * self.c) % self.p)

    def is_zero(self, a):
        return a == (0, 0)

    def is_unit(self, a):
        return a != (0, 0)

    def conj(self, a):
        # the other root of the modulus is c - s
        return ((a[0] + a[1] * self.c) % self.p, -a[1] % self.p)

    def norm(self, a) -> int:
        n = self.mul(a, self.conj(a))
        assert n[1] == 0
        return n[0]

    def inv(self, a):
        if a == (0, 0):
            raise ZeroDivisionError("0 is not invertible")
        ninv = pow(self.norm(a), -1, self.p)
        cj = self.conj(a)
        return (cj[0] * ninv % self.p, cj[1] * ninv % self.p)

    def exact_div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        for b in range(self.p):
            for a in range(self.p):
                yield (a, b)

    def sqrt(self, a):
        a = self.coerce(a)
        for s in self.elements():
            if self.mul(s, s) == a:
                return s
        raise NoSquareRoot(f"{a} is not a square in F_{self.p}^2")

    def format(self, a):
        return f"{a[0]}+{a[1]}*w"

    def parse(self, s):
        return _parse_pair(s, int)

    def describe(self):
        return {"kind": self.kind, "p": self.p, "nonresidue": self.nonresidue}


class QuadraticRing(CoefficientDomain):
    """Z[w] with w = sqrt(D), or w = (1+sqrt(D))/2 when half_basis is set.

    Elements are integer pairs (a, b) meaning a + b*w; Galois conjugation
    is basis-linear.
    """

    kind = "quadratic_ring"

    def __init__(self, D: int, half_basis: bool = False):
        if D == 0 or math.isqrt(abs(D)) ** 2 == abs(D) and D > 0:
            raise WrongDomain(f"D = {D} must be a non-square")
        if half_basis and D % 4 != 1:
            raise WrongDomain("half-integer basis requires D = 1 mod 4")
        self.D = D
        self.half_basis = half_basis

    def coerce(self, x):
        if isinstance(x, tuple) and len(x) == 2:
            return (int(x[0]), int(x[1]))
        if isinstance(x, int):
            return (x, 0)
        raise WrongDomain(f"cannot coerce {x!r} into Z[w]")

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def neg(self, a):
        return (-a[0], -a[1])

    def mul(self, a, b):
        if self.half_basis:
            # w^2 = w + (D-1)/4
            k = (self.D - 1) // 4
            return (a[0] * b[0] + a[1] * b[1] * k, a[0] * b[1] + a[1] * b[0] + a[1] * b[1])
        return (a[0] * b[0] + a[1] * b[1] * self.D, a[0] * b[1] + a[1] * b[0])

    def is_zero(self, a):
        return a == (0, 0)

    def conj(self, a):
        if self.half_basis:
            # sigma(w) = 1 - w
            return (a[0] + a[1], -a[1])
        return (a[0], -a[1])

    def norm(self, a) -> int:
        n = self.mul(a, self.conj(a))
        assert n[1] == 0
        return n[0]

    def is_unit(self, a):
        return self.norm(a) in (1, -1)

    def inv(self, a):
        n = self.norm(a)
        if n not in (1, -1):
            raise InexactDivision(f"{a} is not a unit")
        cj = self.conj(a)
        return (cj[0] * n, cj[1] * n)  # n = +-1

    def exact_div(self, a, b):
        n = self.norm(b)
        if n == 0:
            raise ZeroDivisionError
        num = self.mul(a, self.conj(b))
        if num[0] % n or num[1] % n:
            raise InexactDivision(f"{b} does not divide {a}")
        return (num[0] // n, num[1] // n)

    def format(self, a):
        return f"{a[0]}+{a[1]}*w"

    def parse(self, s):
        return _parse_pair(s, int)

    def describe(self):
        return {"kind": self.kind, "d": self.D, "half": self.half_basis}


def _parse_pair(s: str, conv):
    """Parse 'a', 'b*w', or 'a+b*w' (also with '-')."""
    s = s.replace(" ", "")
    if "w" not in s:
        return (conv(s), 0)
    # split off the w-part: find the sign separating the two summands
    body, _, _ = s.partition("w")
    body = body.rstrip("*")
    # body is now like 'a+b' or 'a-b' or 'b' or '' or '-'
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "+-eE":
            a_str, b_str = body[:i], body[i:]
            break
    else:
        a_str, b_str = "0", body
    if b_str in ("", "+"):
        b_str = "1"
    elif b_str == "-":
        b_str = "-1"
    return (conv(a_str), conv(b_str))


def domain_from_description(desc: dict) -> CoefficientDomain:
    kind = desc.get("kind")
    if kind == "integers":
        return Integers()
    if kind == "rationals":
        return Rationals()
    if kind == "prime_field":
        return PrimeField(desc["p"])
    if kind == "quadratic_field":
        return QuadraticField(desc["p"], desc.get("nonresidue"))
    if kind == "quadratic_ring":
        return QuadraticRing(desc["d"], desc.get("half", False))
    raise WrongDomain(f"unknown domain description {desc!r}")


ZZ = Integers()
QQ = Rationals()

"""Exact scalar arithmetic for Q, Z_p, and simple extension fields.

Supported fields: the rationals, prime fields Z_p, and single extensions
base[x]/(m) where the base is Q or Z_p and m is a monic irreducible
polynomial (towers are rejected).  Element representations are plain
values so equality and hashing just work:

  * rationals   -> fractions.Fraction (always reduced)
  * Z_p         -> int in [0, p)
  * extensions  -> tuple of base elements, length = deg(m), ascending degree

Finite fields carry a canonical element order, "rank": residues by value,
extension elements by sum(rank(c_i) * p**i) over ascending coefficients.
Everything downstream that promises a deterministic "first witness" relies
on this order.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    CharacteristicMismatch,
    DivisionByZero,
    InfiniteFieldError,
    NonMonicModulus,
    NonPrimeModulus,
    ReducibleModulus,
    SpecFormatError,
    UnsupportedDegree,
    UnsupportedTower,
)


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check; inputs are desk-scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common surface of all supported scalar fields."""

    characteristic: int
    order: int | None  # None for infinite fields

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    # arithmetic -------------------------------------------------------

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # enumeration ------------------------------------------------------

    def elements(self):
        """All elements in rank order; finite fields only."""
        if not self.is_finite:
            raise InfiniteFieldError(f"{self} is infinite")
        for r in range(self.order):
            yield self.element_from_rank(r)

    def rank(self, a) -> int:
        raise NotImplementedError

    def element_from_rank(self, r: int):
        raise NotImplementedError

    # prime subfield ---------------------------------------------------

    def embed(self, value, char: int):
        """Embed a prime-subfield scalar (a rational for char 0, a residue
        mod p for char p) into this field."""
        raise NotImplementedError

    def from_int(self, n: int):
        """The element n * 1."""
        if self.characteristic == 0:
            return self.embed(Fraction(n), 0)
        return self.embed(n % self.characteristic, self.characteristic)

    # misc -------------------------------------------------------------

    def contains(self, a) -> bool:
        raise NotImplementedError

    def random_element(self, rng):
        """Deterministic sampling used by the sampled checking strategy.
        Rationals draw numerator in [-9, 9] and denominator in [1, 9]."""
        raise NotImplementedError

    def encode(self, a) -> str:
        raise NotImplementedError

    def decode(self, text: str):
        raise NotImplementedError

    def descriptor(self) -> str:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash(self.descriptor())

    def __repr__(self):
        return self.descriptor()


class Rationals(Field):
    """The field Q; elements are fractions.Fraction."""

    characteristic = 0
    order = None

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("1/0 in Q")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero in Q")
        return a / b

    def embed(self, value, char: int):
        if char != 0:
            raise CharacteristicMismatch(f"residue mod {char} offered to Q")
        return Fraction(value)

    def contains(self, a) -> bool:
        return isinstance(a, Fraction)

    def random_element(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    def encode(self, a) -> str:
        return str(a)

    def decode(self, text: str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecFormatError(f"bad rational {text!r}") from exc

    def descriptor(self) -> str:
        return "Q"


class PrimeField(Field):
    """The field Z_p for a prime p; elements are ints in [0, p)."""

    order: int

    def __init__(self, p: int):
        if not is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = 0
        self.one = 1 % p

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
            raise DivisionByZero(f"1/0 in Z_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def rank(self, a) -> int:
        return a % self.p

    def element_from_rank(self, r: int):
        return r % self.p

    def embed(self, value, char: int):
        if char != self.p:
            raise CharacteristicMismatch(
                f"prime-subfield scalar of characteristic {char} offered to Z_{self.p}"
            )
        return value % self.p

    def contains(self, a) -> bool:
        return isinstance(a, int) and 0 <= a < self.p

    def random_element(self, rng):
        return rng.randrange(self.p)

    def encode(self, a) -> str:
        return str(a)

    def decode(self, text: str):
        try:
            v = int(text.strip())
        except ValueError as exc:
            raise SpecFormatError(f"bad residue {text!r}") from exc
        if not 0 <= v < self.p:
            raise SpecFormatError(f"residue {v} out of range for Z_{self.p}")
        return v

    def descriptor(self) -> str:
        return f"Fp:{self.p}"


# ---------------------------------------------------------------------------
# polynomials over a base field: tuples of base elements, ascending degree
# ---------------------------------------------------------------------------

def poly_trim(base: Field, coeffs):
    coeffs = tuple(coeffs)
    while coeffs and coeffs[-1] == base.zero:
        coeffs = coeffs[:-1]
    return coeffs


def poly_degree(base: Field, coeffs) -> int:
    return len(poly_trim(base, coeffs)) - 1  # -1 for the zero polynomial


def poly_add(base: Field, a, b):
    n = max(len(a), len(b))
    a = tuple(a) + (base.zero,) * (n - len(a))
    b = tuple(b) + (base.zero,) * (n - len(b))
    return poly_trim(base, (base.add(x, y) for x, y in zip(a, b)))


def poly_neg(base: Field, a):
    return tuple(base.neg(x) for x in a)


def poly_sub(base: Field, a, b):
    return poly_add(base, a, poly_neg(base, b))


def poly_mul(base: Field, a, b):
    a = poly_trim(base, a)
    b = poly_trim(base, b)
    if not a or not b:
        return ()
    out = [base.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = base.add(out[i + j], base.mul(x, y))
    return poly_trim(base, out)


def poly_divmod(base: Field, a, b):
    """Quotient and remainder of a by b (b nonzero)."""
    b = poly_trim(base, b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = list(poly_trim(base, a))
    db = len(b) - 1
    lead_inv = base.inv(b[-1])
    quot = [base.zero] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        factor = base.mul(rem[-1], lead_inv)
        quot[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] = base.sub(rem[shift + i], base.mul(factor, c))
        while rem and rem[-1] == base.zero:
            rem.pop()
    return poly_trim(base, quot), poly_trim(base, rem)


def poly_eval(base: Field, coeffs, x):
    acc = base.zero
    for c in reversed(tuple(coeffs)):
        acc = base.add(base.mul(acc, x), c)
    return acc


def _monic_polys(base: Field, degree: int):
    """All monic polynomials of the given degree over a finite base,
    non-leading coefficients in rank order (coefficient 0 fastest)."""
    for r in range(base.order ** degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(base.element_from_rank(r % base.order))
            r //= base.order
        yield tuple(coeffs) + (base.one,)


def _int_divisors(n: int):
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def is_irreducible(base: Field, coeffs) -> bool:
    """Irreducibility of a monic polynomial of degree >= 1.

    Over Z_p: exhaustive trial division by every monic factor of degree
    1..deg/2.  Over Q: degree <= 3 only, where reducibility is equivalent
    to having a rational root (rational root theorem).
    """
    coeffs = tuple(coeffs)
    deg = len(coeffs) - 1
    if deg < 1:
        raise SpecFormatError("constant polynomial has no irreducibility")
    if coeffs[-1] != base.one:
        raise NonMonicModulus("irreducibility is defined here for monic polynomials")
    if deg == 1:
        return True
    if isinstance(base, PrimeField):
        for d in range(1, deg // 2 + 1):
            for g in _monic_polys(base, d):
                _, rem = poly_divmod(base, coeffs, g)
                if not rem:
                    return False
        return True
    if isinstance(base, Rationals):
        if deg > 3:
            raise UnsupportedDegree(
                "irreducibility over Q is only decided for degree <= 3"
            )
        # degree 2 or 3: reducible iff a rational root exists
        if coeffs[0] == 0:
            return False
        denom_lcm = 1
        for c in coeffs:
            denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
        ints = [int(c * denom_lcm) for c in coeffs]
        const, lead = ints[0], ints[-1]
        for p in _int_divisors(const):
            for q in _int_divisors(lead):
                for sign in (1, -1):
                    cand = Fraction(sign * p, q)
                    if poly_eval(base, coeffs, cand) == 0:
                        return False
        return True
    raise UnsupportedTower("irreducibility base must be Q or Z_p")


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def find_irreducible(base: PrimeField, degree: int):
    """Rank-smallest monic irreducible polynomial of the given degree over Z_p."""
    if not isinstance(base, PrimeField):
        raise UnsupportedTower("find_irreducible needs a prime base field")
    if degree < 2:
        raise UnsupportedDegree("extension degree must be >= 2")
    for poly in _monic_polys(base, degree):
        if is_irreducible(base, poly):
            return poly
    raise AssertionError("unreachable: irreducibles exist in every degree")


class ExtensionField(Field):
    """base[x]/(modulus) for monic irreducible modulus over Q or Z_p.

    Elements are coefficient tuples of length deg(modulus), ascending degree.
    The generator is the class of x.
    """

    def __init__(self, base: Field, modulus):
        if isinstance(base, ExtensionField):
            raise UnsupportedTower("towers of extensions are not supported")
        if not isinstance(base, (Rationals, PrimeField)):
            raise UnsupportedTower("extension base must be Q or Z_p")
        modulus = tuple(modulus)
        if len(modulus) < 2 or modulus[-1] != base.one:
            raise NonMonicModulus("modulus must be monic")
        if len(modulus) - 1 < 2:
            raise UnsupportedDegree("extension degree must be >= 2")
        if not is_irreducible(base, modulus):
            raise ReducibleModulus(
                f"modulus {modulus} factors over {base.descriptor()}"
            )
        self.base = base
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.characteristic = base.characteristic
        self.order = None if base.order is None else base.order ** self.degree
        self.zero = (base.zero,) * self.degree
        self.one = (base.one,) + (base.zero,) * (self.degree - 1)
        self.generator = tuple(
            base.one if i == 1 else base.zero for i in range(self.degree)
        )

    def _pad(self, coeffs):
        return tuple(coeffs) + (self.base.zero,) * (self.degree - len(coeffs))

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(self.base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        prod = poly_mul(self.base, a, b)
        _, rem = poly_divmod(self.base, prod, self.modulus)
        return self._pad(rem)

    def inv(self, a):
        if all(c == self.base.zero for c in a):
            raise DivisionByZero(f"1/0 in {self.descriptor()}")
        # extended Euclid: u*a + v*modulus = gcd (a unit constant)
        r0, r1 = self.modulus, poly_trim(self.base, a)
        s0, s1 = (), (self.base.one,)
        while poly_degree(self.base, r1) > 0:
            q, r = poly_divmod(self.base, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(self.base, s0, poly_mul(self.base, q, s1))
        scale = self.base.inv(r1[0])
        u = poly_mul(self.base, s1, (scale,))
        _, u = poly_divmod(self.base, u, self.modulus)
        return self._pad(u)

    def rank(self, a) -> int:
        if not self.is_finite:
            raise InfiniteFieldError(f"{self} has no element rank")
        p = self.base.order
        r = 0
        for c in reversed(a):
            r = r * p + self.base.rank(c)
        return r

    def element_from_rank(self, r: int):
        p = self.base.order
        coeffs = []
        for _ in range(self.degree):
            coeffs.append(self.base.element_from_rank(r % p))
            r //= p
        return tuple(coeffs)

    def embed(self, value, char: int):
        c = self.base.embed(value, char)
        return (c,) + (self.base.zero,) * (self.degree - 1)

    def contains(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == self.degree
            and all(self.base.contains(c) for c in a)
        )

    def random_element(self, rng):
        return tuple(self.base.random_element(rng) for _ in range(self.degree))

    def encode(self, a) -> str:
        return "[" + ",".join(self.base.encode(c) for c in a) + "]"

    def decode(self, text: str):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise SpecFormatError(f"bad extension element {text!r}")
        parts = text[1:-1].split(",")
        if len(parts) != self.degree:
            raise SpecFormatError(
                f"expected {self.degree} coefficients in {text!r}"
            )
        return tuple(self.base.decode(p) for p in parts)

    def descriptor(self) -> str:
        coeffs = ",".join(self.base.encode(c) for c in self.modulus)
        if isinstance(self.base, PrimeField):
            return f"Fq:{self.base.p}:{coeffs}"
        return f"Qext:{coeffs}"


# ---------------------------------------------------------------------------
# text descriptors: "Q" | "Fp:<p>" | "Fq:<p>:<c0,...,1>" | "Qext:<c0,...,1>"
# ---------------------------------------------------------------------------

def parse_field(text: str) -> Field:
    text = text.strip()
    if text == "Q":
        return Rationals()
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError as exc:
            raise SpecFormatError(f"bad field descriptor {text!r}") from exc
        return PrimeField(p)
    if text.startswith("Fq:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise SpecFormatError(f"bad field descriptor {text!r}")
        try:
            p = int(parts[1])
        except ValueError as exc:
            raise SpecFormatError(f"bad field descriptor {text!r}") from exc
        base = PrimeField(p)
        modulus = tuple(base.decode(c) for c in parts[2].split(","))
        return ExtensionField(base, modulus)
    if text.startswith("Qext:"):
        base = Rationals()
        modulus = tuple(base.decode(c) for c in text[5:].split(","))
        return ExtensionField(base, modulus)
    raise SpecFormatError(f"unknown field descriptor {text!r}")


def gf(p: int, degree: int = 1) -> Field:
    """Convenience constructor: GF(p**degree) with the rank-smallest modulus."""
    base = PrimeField(p)
    if degree == 1:
        return base
    return ExtensionField(base, find_irreducible(base, degree))

"""Exact commutative PID arithmetic: integers, rationals, prime fields.

Elements are plain Python values (int for ZZ and GF(p), Fraction for QQ);
a Ring object supplies the operations so matrix code stays ring-generic.
"""

from fractions import Fraction


class Ring:
    """Base class for the three runtime rings. All arithmetic is exact."""

    name = "?"
    is_field = False

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def is_zero(self, a):
        return a == self.zero()

    def is_unit(self, a):
        raise NotImplementedError

    def inv(self, a):
        """Inverse of a unit."""
        raise NotImplementedError

    def divmod(self, a, b):
        """Euclidean division a = q*b + r with r smaller than b."""
        raise NotImplementedError

    def div(self, a, b):
        """Exact division; b must divide a."""
        q, r = self.divmod(a, b)
        if not self.is_zero(r):
            raise ArithmeticError(f"{b} does not divide {a} in {self.name}")
        return q

    def divides(self, a, b):
        """True if a divides b."""
        if self.is_zero(a):
            return self.is_zero(b)
        return self.is_zero(self.divmod(b, a)[1])

    def canonical_unit(self, a):
        """Unit u such that u*a is the canonical associate of a (positive
        integer, monic rational, nonzero residue normalized to itself)."""
        raise NotImplementedError

    def __repr__(self):
        return self.name


class IntegerRing(Ring):
    name = "Z"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return int(n)

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
        if a in (1, -1):
            return a
        raise ArithmeticError(f"{a} is not a unit in Z")

    def divmod(self, a, b):
        q, r = divmod(a, b)
        # bias remainder toward smallest absolute value for faster SNF
        # (python's r has the sign of b and |r| < |b|; stepping q once more
        # flips r across zero, shrinking it whenever |r| > |b|/2)
        if 2 * abs(r) > abs(b):
            q += 1
            r = a - q * b
        return q, r

    def canonical_unit(self, a):
        return -1 if a < 0 else 1


class RationalField(Ring):
    name = "Q"
    is_field = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

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
        if a == 0:
            raise ArithmeticError("0 is not a unit in Q")
        return 1 / Fraction(a)

    def divmod(self, a, b):
        return a / Fraction(b), Fraction(0)

    def canonical_unit(self, a):
        return Fraction(1) if a == 0 else 1 / Fraction(a)


class PrimeField(Ring):
    is_field = True

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        if a % self.p == 0:
            raise ArithmeticError(f"0 is not a unit in {self.name}")
        return pow(a, -1, self.p)

    def divmod(self, a, b):
        return (a * self.inv(b)) % self.p, 0

    def canonical_unit(self, a):
        return 1 if a % self.p == 0 else self.inv(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


ZZ = IntegerRing()
QQ = RationalField()

_prime_fields = {}


def GF(p):
    """The prime field with p elements (cached)."""
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def ring_from_name(name):
    """Parse a ring selector: 'z', 'q', or 'fp:<prime>'."""
    name = name.lower()
    if name == "z":
        return ZZ
    if name == "q":
        return QQ
    if name.startswith("fp:"):
        return GF(int(name[3:]))
    raise ValueError(f"unknown ring selector {name!r} (use z, q, fp:<prime>)")

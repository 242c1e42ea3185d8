"""Two-generator numerical semigroups <a, b> and their invariants.

For coprime positive generators a, b the semigroup is the set of all
non-negative integer combinations x*a + y*b.  The classical closed forms
used here:

    frobenius = a*b - a - b            (largest gap; -1 when a or b is 1)
    genus     = (a - 1)(b - 1) / 2     (number of gaps)
    Ap(S, a)  = {0, b, 2b, ..., (a-1)b}

plus Popoviciu's formula for the denumerant (the number of representations
of c as x*a + y*b with x, y >= 0).
"""

from dataclasses import dataclass, field
from math import gcd

from .rationals import egcd


@dataclass(frozen=True)
class TwoGenSemigroup:
    a: int
    b: int
    frobenius: int = field(init=False)
    genus: int = field(init=False)

    def __post_init__(self):
        a, b = self.a, self.b
        if a < 1 or b < 1:
            raise ValueError(f"generators must be >= 1, got ({a}, {b})")
        if gcd(a, b) != 1:
            raise ValueError(f"generators must be coprime, got ({a}, {b})")
        object.__setattr__(self, "frobenius", a * b - a - b)
        object.__setattr__(self, "genus", (a - 1) * (b - 1) // 2)

    def apery(self, s):
        """Apery set with respect to a generator s, as a list indexed by
        residue: entry i is the least semigroup element congruent to i mod s."""
        if s == self.a:
            other = self.b
        elif s == self.b:
            other = self.a
        else:
            raise ValueError(f"{s} is not a generator of <{self.a}, {self.b}>")
        out = [0] * s
        for i in range(s):
            out[(i * other) % s] = i * other
        return out

    def _min_in_class(self, n):
        # least semigroup element congruent to n modulo a
        a, b = self.a, self.b
        if a == 1:
            return 0
        _, u, _ = egcd(b % a, a)  # u inverts b mod a (gcd is 1)
        i = (n % a) * u % a
        return i * b

    def contains(self, n):
        """True iff n = x*a + y*b for some x, y >= 0."""
        return n >= 0 and n >= self._min_in_class(n)

    __contains__ = contains

    def gaps(self):
        """All non-negative integers not in the semigroup, sorted ascending."""
        out = []
        for w in self.apery(self.a):
            out.extend(range(w % self.a, w, self.a))
        return sorted(out)

    def count_upto(self, c):
        """Number of semigroup elements in [0, c].

        Summed over the Apery set of a: each class mod a contributes the
        elements w, w + a, w + 2a, ... up to c.
        """
        if c < 0:
            return 0
        total = 0
        for w in self.apery(self.a):
            if w <= c:
                total += (c - w) // self.a + 1
        return total

    def denumerant(self, c):
        """Number of pairs (x, y) with x, y >= 0 and x*a + y*b = c.

        Popoviciu's closed form: with a' solving a*a' = -c (mod b) and
        b' solving b*b' = -c (mod a), the count is
        (c + a*a' + b*b')/(a*b) - 1.  The congruence solutions are taken
        in (0, b] and (0, a]: when the residue is 0 the representative
        a' = b (resp. b' = a) is the one that makes the formula exact,
        matching the fractional-part statement of the theorem.  A
        generator equal to 1 degenerates the congruences, so those cases
        are counted directly.
        """
        if c < 0:
            return 0
        a, b = self.a, self.b
        if a == 1 and b == 1:
            return c + 1
        if a == 1:
            return c // b + 1
        if b == 1:
            return c // a + 1
        _, u, _ = egcd(a % b, b)
        ap = (-c % b) * u % b
        if ap == 0:
            ap = b
        _, u, _ = egcd(b % a, a)
        bp = (-c % a) * u % a
        if bp == 0:
            bp = a
        num = c + a * ap + b * bp
        assert num % (a * b) == 0
        return num // (a * b) - 1


def denumerant2(a, b, c):
    """Convenience wrapper: the denumerant of c in <a, b>."""
    return TwoGenSemigroup(a, b).denumerant(c)

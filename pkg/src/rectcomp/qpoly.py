"""Dense polynomials in q with exact rational coefficients.

Coefficients are stored as ``int`` when integral and as
:class:`fractions.Fraction` otherwise, so counting code stays on fast
big-int arithmetic while rational inputs remain exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence, Union

Coeff = Union[int, Fraction]

__all__ = [
    "Poly",
    "SequenceProfile",
    "q_int",
    "q_binomial",
    "add",
    "mul",
    "shift",
    "profile",
    "parse_coeff",
    "unimodality_violations",
]


def _norm(c) -> Coeff:
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _norm(parse_coeff(c))
    raise TypeError(f"inexact coefficient {c!r}; use int, Fraction or 'num/den'")


def parse_coeff(token: str) -> Coeff:
    """Parse ``"3"``, ``"-7"`` or ``"33/5"`` into an exact coefficient.

    Decimal notation such as ``"2.3"`` is accepted and read exactly.
    """
    token = token.strip()
    if not token:
        raise ValueError("empty coefficient")
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad coefficient {token!r}") from exc
    return value.numerator if value.denominator == 1 else value


class Poly:
    """Immutable polynomial ``sum(coeffs[i] * q**i)``.

    Trailing zeros are stripped on construction, so equal polynomials have
    equal ``coeffs``. The zero polynomial has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, d: int, c: Coeff = 1) -> "Poly":
        return cls([0] * d + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Coeff:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return add(self, -other)

    def __rsub__(self, other):
        return Poly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return mul(self, other)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc) if isinstance(acc, (int, Fraction)) else acc

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def to_json(self) -> list[str]:
        """Coefficient strings, ``"num/den"`` for non-integers."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(parse_coeff(str(s)) for s in data)

    def __repr__(self):
        return f"Poly({list(map(str, self.coeffs))})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            cs = str(c)
            if isinstance(c, Fraction):
                cs = f"({cs})"
            if i == 0:
                terms.append(cs)
            else:
                mono = "q" if i == 1 else f"q^{i}"
                terms.append(mono if c == 1 else f"{cs}*{mono}")
        return " + ".join(terms)


def add(p: Poly, r: Poly) -> Poly:
    a, b = p.coeffs, r.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return Poly(out)


def mul(p: Poly, r: Poly) -> Poly:
    a, b = p.coeffs, r.coeffs
    if not a or not b:
        return Poly()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return Poly(out)


def shift(p: Poly, d: int) -> Poly:
    """Multiply by ``q**d``."""
    if d < 0:
        raise ValueError(f"shift must be nonnegative, got {d}")
    if p.is_zero():
        return p
    return Poly([0] * d + list(p.coeffs))


def q_int(n: int) -> Poly:
    """The q-integer ``[n] = 1 + q + ... + q**(n-1)``."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"q_int needs a positive integer, got {n!r}")
    return Poly([1] * n)


@lru_cache(maxsize=None)
def _qbin(a: int, b: int) -> tuple[int, ...]:
    if b == 0 or b == a:
        return (1,)
    # q-Pascal: [a,b] = [a-1,b-1] + q^b [a-1,b]
    left = _qbin(a - 1, b - 1)
    right = _qbin(a - 1, b)
    out = [0] * (b * (a - b) + 1)
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + b] += c
    return tuple(out)


def q_binomial(a: int, b: int) -> Poly:
    """Gaussian binomial coefficient, built by the q-Pascal recurrence."""
    if a < 0 or b < 0 or b > a:
        raise ValueError(f"q_binomial needs 0 <= b <= a, got a={a}, b={b}")
    b = min(b, a - b)
    return Poly(_qbin(a, b))


@dataclass(frozen=True)
class SequenceProfile:
    unimodal: bool
    log_concave: bool
    symmetric: bool
    mode_indices: frozenset
    degree: int

    def to_json(self) -> dict:
        return {
            "unimodal": self.unimodal,
            "log_concave": self.log_concave,
            "symmetric": self.symmetric,
            "mode_indices": sorted(self.mode_indices),
            "degree": self.degree,
        }


def profile(p: Union[Poly, Sequence]) -> SequenceProfile:
    """Unimodality, log-concavity and symmetry of a coefficient sequence.

    Every coefficient from index 0 to the degree is examined, internal zeros
    included. Log-concavity is only required at interior indices. The zero
    polynomial is treated as the one-term sequence ``[0]``.
    """
    seq = list(p.coeffs) if isinstance(p, Poly) else [_norm(c) for c in p]
    degree = p.degree if isinstance(p, Poly) else len(seq) - 1
    if not seq:
        seq = [0]
    r = len(seq) - 1

    # rising[m]: a_0 <= ... <= a_m ; falling[m]: a_m >= ... >= a_r
    rising = [True] * (r + 1)
    for i in range(1, r + 1):
        rising[i] = rising[i - 1] and seq[i - 1] <= seq[i]
    falling = [True] * (r + 1)
    for i in range(r - 1, -1, -1):
        falling[i] = falling[i + 1] and seq[i] >= seq[i + 1]
    modes = frozenset(m for m in range(r + 1) if rising[m] and falling[m])

    log_concave = all(seq[i] * seq[i] >= seq[i - 1] * seq[i + 1] for i in range(1, r))
    symmetric = all(seq[i] == seq[r - i] for i in range(r + 1))
    return SequenceProfile(
        unimodal=bool(modes),
        log_concave=log_concave,
        symmetric=symmetric,
        mode_indices=modes,
        degree=degree,
    )


def unimodality_violations(seq: Sequence) -> list[int]:
    """Indices ``i`` with a strictly larger entry on both sides.

    These are exactly the positions that rule out every candidate mode; the
    list is empty iff the sequence is unimodal.
    """
    vals = [_norm(c) for c in seq]
    n = len(vals)
    if n < 3:
        return []
    left = [vals[0]] * n
    for i in range(1, n):
        left[i] = max(left[i - 1], vals[i - 1])
    right = [vals[-1]] * n
    for i in range(n - 2, -1, -1):
        right[i] = max(right[i + 1], vals[i + 1])
    return [i for i in range(1, n - 1) if left[i] > vals[i] < right[i]]

"""Signed permutations: the group W(B_n) and its index-2 subgroup W(D_n).

An element is kept in the normal form (sign flips) * (permutation), i.e.
c_{j_1}...c_{j_t} tau with tau applied first.  Products compose right to
left: (a * b) means b acts first, so matrix representations satisfy
Phi(a*b) = Phi(a) Phi(b) on column vectors.

Symbols are the 2n objects j^+ / j^-, encoded as pairs (j, +1) / (j, -1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from math import lcm
from typing import Iterable, Iterator, Sequence

Symbol = tuple[int, int]


class SignedPerm:
    """Element of W(B_n): a permutation of {1..n} plus a set of sign flips."""

    __slots__ = ("n", "image", "minus", "_hash")

    def __init__(self, n: int, image: Sequence[int], minus: Iterable[int]):
        self.n = n
        self.image = tuple(image)
        self.minus = frozenset(minus)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"image is not a bijection of 1..{n}")
        if not all(1 <= j <= n for j in self.minus):
            raise ValueError("sign index out of range")
        self._hash = hash((n, self.image, self.minus))

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(n, range(1, n + 1), ())

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]], minus: Iterable[int] = ()) -> "SignedPerm":
        image = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated index inside cycle {tuple(cyc)}")
            if seen & set(cyc):
                raise ValueError("cycles are not disjoint")
            seen |= set(cyc)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                if not (1 <= a <= n):
                    raise ValueError(f"index {a} out of range 1..{n}")
                image[a - 1] = b
        return cls(n, image, minus)

    @classmethod
    def from_enc(cls, n: int, enc: Sequence[int]) -> "SignedPerm":
        image = [0] * n
        minus = []
        for j, s in enumerate(enc, start=1):
            image[j - 1] = (s >> 1) + 1
            if s & 1:
                minus.append((s >> 1) + 1)
        return cls(n, image, minus)

    @property
    def enc(self) -> tuple[int, ...]:
        """Action on the symbols 1^+..n^+: entry j-1 encodes the image of j^+.

        Symbol k^+ is 2(k-1), symbol k^- is 2(k-1)+1; pairing is XOR 1.
        """
        img = self.image
        minus = self.minus
        return tuple(
            2 * (img[j] - 1) + (1 if img[j] in minus else 0) for j in range(self.n)
        )

    def sort_key(self) -> tuple:
        signs = tuple(-1 if j in self.minus else 1 for j in range(1, self.n + 1))
        return (signs, self.image)

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        """Composition with ``other`` applied first."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        a_img = self.image
        image = tuple(a_img[j - 1] for j in other.image)
        minus = self.minus ^ frozenset(a_img[j - 1] for j in other.minus)
        return SignedPerm(self.n, image, minus)

    def inverse(self) -> "SignedPerm":
        image = [0] * self.n
        for j, t in enumerate(self.image, start=1):
            image[t - 1] = j
        minus = frozenset(image[j - 1] for j in self.minus)
        return SignedPerm(self.n, image, minus)

    def __pow__(self, k: int) -> "SignedPerm":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = SignedPerm.identity(self.n)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SignedPerm)
            and self.n == other.n
            and self.image == other.image
            and self.minus == other.minus
        )

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "SignedPerm") -> bool:
        return self.sort_key() < other.sort_key()

    def is_identity(self) -> bool:
        return not self.minus and self.image == tuple(range(1, self.n + 1))

    def order(self) -> int:
        k = 1
        for cyc in signed_cycles(self):
            w = len(cyc.support)
            k = lcm(k, 2 * w if len(cyc.minus_indices) % 2 else w)
        return k

    def act_index(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise ValueError(f"index {j} out of range 1..{self.n}")
        return self.image[j - 1]

    def act_symbol(self, symbol: Symbol) -> Symbol:
        """Image of j^+ or j^- under the group action on 2n symbols."""
        j, sign = symbol
        if sign not in (1, -1):
            raise ValueError("symbol sign must be +1 or -1")
        t = self.act_index(j)
        return (t, -sign if t in self.minus else sign)

    def __repr__(self) -> str:
        return f"SignedPerm({self.n}, {format_element(self)!r})"


def multiply(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    """Product a*b, with b applied first."""
    return a * b


def conjugate(a: SignedPerm, t: SignedPerm) -> SignedPerm:
    """t a t^{-1}; preserves sigma, the Lambda count and the cycle shape."""
    return t * a * t.inverse()


def sigma(a: SignedPerm) -> int:
    """The character (-1)^(number of sign flips); W(D_n) is its kernel."""
    return -1 if len(a.minus) % 2 else 1


@dataclass(frozen=True)
class SignedCycle:
    """One cycle of the underlying permutation plus the flips it carries."""

    support: tuple[int, ...]
    minus_indices: frozenset[int]

    @property
    def trivial(self) -> bool:
        return len(self.support) == 1 and not self.minus_indices

    @property
    def sigma(self) -> int:
        return -1 if len(self.minus_indices) % 2 else 1

    def as_perm(self, n: int) -> SignedPerm:
        cycles = [self.support] if len(self.support) > 1 else []
        return SignedPerm.from_cycles(n, cycles, self.minus_indices)


def signed_cycles(a: SignedPerm) -> list[SignedCycle]:
    """Disjoint signed cycles covering {1..n}, sorted by smallest support."""
    seen: set[int] = set()
    out: list[SignedCycle] = []
    for start in range(1, a.n + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        j = a.image[start - 1]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = a.image[j - 1]
        out.append(SignedCycle(tuple(cyc), frozenset(cyc) & a.minus))
    return out


def lambda_count(a: SignedPerm) -> int:
    """Number of signed cycles with an odd number of flips (always even on W(D_n))."""
    return sum(1 for cyc in signed_cycles(a) if len(cyc.minus_indices) % 2)


def reassemble(n: int, cycles: Iterable[SignedCycle]) -> SignedPerm:
    """Product of disjoint signed cycles; inverse of signed_cycles."""
    return reduce(multiply, (c.as_perm(n) for c in cycles), SignedPerm.identity(n))


_TOKEN = re.compile(r"\s*(c\s*(\d+)|\(\s*\d+\s*(?:,\s*\d+\s*)+\))")
_CYCLE_INT = re.compile(r"\d+")


def parse_element(text: str, n: int) -> SignedPerm:
    """Parse the element grammar: factors are c<int> or (i,j,...), product right-first."""
    pos = 0
    factors: list[SignedPerm] = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"syntax error at position {pos}: {text[pos:]!r}")
        tok = m.group(1)
        if tok.startswith("c"):
            j = int(m.group(2))
            if not 1 <= j <= n:
                raise ValueError(f"index {j} out of range 1..{n}")
            factors.append(SignedPerm(n, range(1, n + 1), (j,)))
        else:
            idx = [int(s) for s in _CYCLE_INT.findall(tok)]
            for j in idx:
                if not 1 <= j <= n:
                    raise ValueError(f"index {j} out of range 1..{n}")
            if len(set(idx)) != len(idx):
                raise ValueError(f"repeated index inside cycle {tok}")
            factors.append(SignedPerm.from_cycles(n, [idx]))
        pos = m.end()
    return reduce(multiply, factors, SignedPerm.identity(n))


def format_element(a: SignedPerm) -> str:
    """Normal form text: flips ascending, then cycles sorted by smallest member."""
    parts = [f"c{j}" for j in sorted(a.minus)]
    for cyc in signed_cycles(a):
        if len(cyc.support) > 1:
            parts.append("(" + ",".join(str(j) for j in cyc.support) + ")")
    return " ".join(parts)


def iter_wdn(n: int) -> Iterator[SignedPerm]:
    """All elements of W(D_n), lazily (2^(n-1) n! of them)."""
    from itertools import combinations, permutations

    indices = list(range(1, n + 1))
    evens = [c for k in range(0, n + 1, 2) for c in combinations(indices, k)]
    for img in permutations(indices):
        for minus in evens:
            yield SignedPerm(n, img, minus)


def wdn_order(n: int) -> int:
    from math import factorial

    return factorial(n) * 2 ** (n - 1)

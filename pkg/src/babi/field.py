"""Finite fields GF(q), q <= 32, as explicit operation tables."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

MAX_ORDER = 32

# Monic irreducible polynomials, coefficients from the constant term upward.
IRREDUCIBLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
    (3, 2): (1, 0, 1),  # x^2 + 1
    (3, 3): (1, 2, 0, 1),  # x^3 + 2x + 1
    (5, 2): (2, 0, 1),  # x^2 + 2
}


class FieldError(ValueError):
    pass


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``q == p**k`` and p prime, else ``None``."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    return (p, k) if rest == 1 else None


@dataclass(frozen=True)
class FieldTable:
    """GF(q) with elements ``0..q-1``; element ``i`` encodes a polynomial in base p.

    0 and 1 are the additive and multiplicative identities.
    """

    q: int
    p: int
    k: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    inv: tuple[int | None, ...]

    @property
    def elements(self) -> range:
        return range(self.q)

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def squares(self) -> frozenset[int]:
        """Non-zero squares, i.e. the squares of GF(q)*."""
        return frozenset(self.mul[x][x] for x in range(1, self.q))

    def is_nonzero_square(self, a: int) -> bool:
        return a in self.squares()

    def pow(self, a: int, e: int) -> int:
        out = 1
        for _ in range(e):
            out = self.mul[out][a]
        return out

    def subfield(self, order: int) -> frozenset[int]:
        """Elements of the subfield of the given order (fixed points of x -> x**order)."""
        return frozenset(x for x in range(self.q) if self.pow(x, order) == x)


def _digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(x % p)
        x //= p
    return out


def _number(digits: list[int], p: int) -> int:
    return sum(d * p**i for i, d in enumerate(digits))


def _polymul(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg]
        if c:
            for i, m in enumerate(modulus):
                prod[deg - k + i] = (prod[deg - k + i] - c * m) % p
    return prod[:k]


def _check_axioms(add, mul, q: int) -> None:
    E = range(q)
    for a in E:
        if add[0][a] != a or mul[1][a] != a:
            raise FieldError("identity law fails")
        if a and not any(mul[a][b] == 1 for b in E):
            raise FieldError(f"{a} has no inverse")
        if not any(add[a][b] == 0 for b in E):
            raise FieldError(f"{a} has no negative")
        for b in E:
            if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                raise FieldError("commutativity fails")
            for c in E:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    raise FieldError("additive associativity fails")
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    raise FieldError("multiplicative associativity fails")
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    raise FieldError("distributivity fails")


@lru_cache(maxsize=None)
def gf(q: int) -> FieldTable:
    """Operation tables for GF(q); field axioms are checked exhaustively."""
    pk = prime_power(q)
    if pk is None or q > MAX_ORDER:
        raise FieldError(f"q={q} is not a prime power in [2, {MAX_ORDER}]")
    p, k = pk
    if k == 1:
        add = tuple(tuple((a + b) % p for b in range(p)) for a in range(p))
        mul = tuple(tuple((a * b) % p for b in range(p)) for a in range(p))
    else:
        modulus = IRREDUCIBLE[(p, k)]
        digits = [_digits(x, p, k) for x in range(q)]
        add = tuple(
            tuple(_number([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q))
            for a in range(q)
        )
        mul = tuple(
            tuple(_number(_polymul(digits[a], digits[b], modulus, p), p) for b in range(q))
            for a in range(q)
        )
    _check_axioms(add, mul, q)
    neg = tuple(next(b for b in range(q) if add[a][b] == 0) for a in range(q))
    inv = (None,) + tuple(next(b for b in range(q) if mul[a][b] == 1) for a in range(1, q))
    return FieldTable(q=q, p=p, k=k, add=add, mul=mul, neg=neg, inv=inv)

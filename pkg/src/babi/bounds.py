"""Closed-form lower, exact and upper bounds on babi-cage orders. Integer arithmetic only."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class BoundResult:
    value: int
    kind: str  # "lower", "exact" or "upper"
    source: str

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("bounds are non-negative")
        if self.kind not in ("lower", "exact", "upper"):
            raise ValueError(f"bad kind {self.kind!r}")

    def to_dict(self) -> dict:
        return {"value": self.value, "kind": self.kind, "source": self.source}


def _exact_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    if rem:
        raise ArithmeticError(f"{a}/{b} is not integral")
    return q


def _require_rs(r: int, s: int) -> None:
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    if s <= r:
        raise ValueError(f"need r < s, got r={r}, s={s}")


def moore(k: int, g: int) -> BoundResult:
    """Moore bound n0(k, g) for k-regular graphs of girth g."""
    if k < 3:
        raise ValueError(f"Moore bound needs k >= 3, got {k}")
    if g < 3:
        raise ValueError(f"need g >= 3, got {g}")
    if g % 2:
        value = _exact_div(k * (k - 1) ** ((g - 1) // 2) - 2, k - 2)
    else:
        value = _exact_div(2 * (k - 1) ** (g // 2) - 2, k - 2)
    return BoundResult(value, "lower", "Moore bound")


def _geometric(base: int, top: int) -> int:
    """1 + base + ... + base**top, and 0 when top < 0."""
    return sum(base**i for i in range(top + 1))


def babi_lower(r: int, s: int, g: int) -> BoundResult:
    """Moore-tree lower bound for (r,s;g)-babi-graphs."""
    _require_rs(r, s)
    if g < 3:
        raise ValueError(f"need g >= 3, got {g}")
    if g == 3:
        value = 1 + s
    elif g == 4:
        value = 2 * s
    elif g % 2:
        value = 1 + s + (r * s + (s - r) ** 2 - s) * _geometric(r - 1, (g - 5) // 2)
    else:
        value = 2 * (s + (r * s + (s - r) ** 2 - 2 * s + 1) * _geometric(r - 1, (g - 6) // 2))
    return BoundResult(value, "lower", "babi Moore-tree bound")


def babi_g3_exact(r: int, s: int) -> BoundResult:
    _require_rs(r, s)
    if s + 1 >= 2 * r:
        return BoundResult(2 * (s - r + 1), "exact", "girth 3, (s+1)/2 >= r")
    m = s % 4
    if m == 3 or (m == 1 and r % 2):
        extra = 1
    elif m == 2 or (m == 0 and r % 2 == 0):
        extra = 2
    elif m == 1:
        extra = 3
    else:
        extra = 4
    return BoundResult(s + extra, "exact", f"girth 3, r > (s+1)/2, s = {m} mod 4")


def babi_g4_exact(r: int, s: int) -> BoundResult:
    _require_rs(r, s)
    if s >= 2 * r:
        return BoundResult(4 * (s - r), "exact", "girth 4, s >= 2r")
    if s % 2 == 0:
        return BoundResult(2 * s, "exact", "girth 4, 2r > s, s even")
    return BoundResult(2 * (s + 1), "exact", "girth 4, 2r > s, s odd")


def semireg5_lower(r: int) -> BoundResult:
    """Lower bound on n_bb(r, r+1; 5) for r > 2."""
    if r <= 2:
        raise ValueError(f"needs r > 2, got {r}")
    extra = 4 if r % 4 in (0, 3) else 6
    return BoundResult(r * r + r + extra, "lower", "semi-regular girth 5")


def semireg5_plus2_lower(r: int) -> BoundResult:
    """Lower bound on n_bb(r, r+2; 5): the Moore-tree bound r^2+2r+5 is never attained."""
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    extra = 7 if r % 2 else 6
    return BoundResult(r * r + 2 * r + extra, "lower", "girth 5, s = r + 2")


def semireg6_lower(r: int) -> BoundResult:
    """Lower bound on n_bb(r, r+1; 6)."""
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    if r in (2, 4, 6):
        value = 2 * (r * r + 2)
    elif r % 2:
        value = 2 * (r * r + 3)
    else:
        value = 2 * (r * r + 4)
    return BoundResult(value, "lower", "semi-regular girth 6")


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    d: int | None = None

    def __bool__(self) -> bool:
        return self.feasible


def equality56_feasible(r: int, s: int, g: int) -> Feasibility:
    """Necessary conditions for the girth 5/6 Moore-tree bound to be attained.

    For g = 5 the fat-vertex count forces 2((s-r)^2 + r^2 - r + 1) = rs + (s-r)^2 + 1.
    For g = 6 some 0 <= d <= min(r, s-r-1) must solve
    s^2 - (3r+1)s + 4r^2 - 2d^2 + 1 = 0 with 8d^2 > 7r^2 - 6r + 3 and s < 2r - 2.
    """
    _require_rs(r, s)
    if g == 5:
        ok = 2 * ((s - r) ** 2 + r * r - r + 1) == r * s + (s - r) ** 2 + 1
        return Feasibility(ok)
    if g == 6:
        if not s < 2 * r - 2:
            return Feasibility(False)
        for d in range(0, min(r, s - r - 1) + 1):
            if s * s - (3 * r + 1) * s + 4 * r * r - 2 * d * d + 1 != 0:
                continue
            if 8 * d * d > 7 * r * r - 6 * r + 3:
                return Feasibility(True, d)
        return Feasibility(False)
    raise ValueError(f"only g = 5 or 6 are covered, got {g}")


def fat_edge_lower(v: int, r: int, s: int) -> int:
    """Fewest fat edges an order-v babi-graph can have: ceil(v(s-r)/4).

    For every order a babi-graph can actually have this is the exact value v(s-r)/4.
    """
    if v % 2:
        raise ValueError(f"babi-graphs have even order, got {v}")
    return -(-v * (s - r) // 4)


@dataclass(frozen=True)
class CensusCaps:
    """Upper bounds on fat and thin edges of an (r, r+1; 6)-babi-graph of order 2r^2 + c.

    ``fat`` = cv/8 and ``thin`` = (c-2)v/8, stated as strict bounds.
    ``validated`` is False for r = 2, where an order-12 graph reaches fat = 6.
    """

    fat: Fraction
    thin: Fraction
    strict: bool = True
    validated: bool = True


def census_caps(v: int, r: int, c: int) -> CensusCaps:
    if v % 2:
        raise ValueError(f"babi-graphs have even order, got {v}")
    if c <= 2:
        raise ValueError(f"needs c > 2, got {c}")
    if v != 2 * r * r + c:
        raise ValueError(f"v must equal 2r^2 + c = {2 * r * r + c}, got {v}")
    return CensusCaps(fat=Fraction(c * v, 8), thin=Fraction((c - 2) * v, 8), validated=r > 2)


def erdos_sachs_upper(k: int, g: int) -> BoundResult:
    """n(k, g) <= 4 * sum_{t=1}^{g-2} (k-1)^t."""
    if k < 2 or g < 3:
        raise ValueError("needs k >= 2, g >= 3")
    return BoundResult(4 * sum((k - 1) ** t for t in range(1, g - 1)), "upper", "Erdos-Sachs")


def babi_upper(r: int, s: int, g: int) -> BoundResult:
    _require_rs(r, s)
    if g < 3:
        raise ValueError(f"need g >= 3, got {g}")
    sr = sum((r - 1) ** t for t in range(1, g - 1))
    ss = sum((s - 1) ** t for t in range(1, g - 1))
    return BoundResult(32 * sr * ss, "upper", "two replicated cages joined by switching")


def admissible_order(r: int, s: int, v: int) -> bool:
    """Even order, and divisible by 4 when exactly one of r, s is odd."""
    if v <= 0 or v % 2:
        return False
    return v % 4 == 0 if (r + s) % 2 else True


def babi_lower_refined(r: int, s: int, g: int) -> BoundResult:
    """The Moore-tree bound, plus one when it cannot be attained (g = 5, 6),
    rounded up to the next admissible order."""
    value = babi_lower(r, s, g).value
    notes = []
    if g in (5, 6) and not equality56_feasible(r, s, g):
        value += 1
        notes.append("not attained")
    while not admissible_order(r, s, value):
        value += 1
    if value != babi_lower(r, s, g).value:
        notes.append("admissible order")
    source = "babi Moore-tree bound" + (f" ({', '.join(notes)})" if notes else "")
    return BoundResult(value, "lower", source)


def all_bounds(r: int, s: int, g: int) -> dict:
    """Every bound that applies to (r, s; g), keyed by name."""
    out: dict = {
        "babi_lower": babi_lower(r, s, g).to_dict(),
        "babi_lower_refined": babi_lower_refined(r, s, g).to_dict(),
        "babi_upper": babi_upper(r, s, g).to_dict(),
    }
    for k in (r, s):
        if k >= 3:
            out[f"moore_{k}"] = moore(k, g).to_dict()
    if g == 3:
        out["exact"] = babi_g3_exact(r, s).to_dict()
    elif g == 4:
        out["exact"] = babi_g4_exact(r, s).to_dict()
    if g == 5 and s == r + 1 and r > 2:
        out["semireg5_lower"] = semireg5_lower(r).to_dict()
    if g == 5 and s == r + 2:
        out["semireg5_plus2_lower"] = semireg5_plus2_lower(r).to_dict()
    if g == 6 and s == r + 1:
        out["semireg6_lower"] = semireg6_lower(r).to_dict()
    if g in (5, 6):
        f = equality56_feasible(r, s, g)
        out["equality_feasible"] = {"feasible": f.feasible, "d": f.d}
    return out

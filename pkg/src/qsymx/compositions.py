"""Compositions of non-negative integers and their combinatorics.

A composition is a plain tuple of positive ints; the empty tuple is the
composition of 0.  Compositions of n are identified with subsets of
{1, ..., n-1} through their proper partial sums, stored as a bitmask
(bit i-1 set  <=>  i is a partial sum).  The bitmask gives O(1) refinement
tests and a canonical dense index 0 .. 2^(n-1)-1 used by the character
tables; the deterministic enumeration order is increasing bitmask.
"""

from functools import lru_cache
from typing import NamedTuple

__all__ = [
    "Composition",
    "composition",
    "parse_composition",
    "format_composition",
    "weight",
    "to_index",
    "from_index",
    "all_compositions",
    "stats",
    "CompositionStats",
    "p_minus",
    "p_plus",
    "refines",
    "refinements",
    "coarsenings",
    "reversal",
    "conjugate",
    "deconcatenate",
    "LatticePath",
    "delannoy_paths",
    "quasi_shuffle",
    "CutPair",
    "ribbon_cuts",
]

Composition = tuple[int, ...]

# Lattice paths are tuples over these step symbols.
HORIZONTAL = "H"
VERTICAL = "V"
DIAGONAL = "D"
LatticePath = tuple[str, ...]


def composition(parts) -> Composition:
    """Validate an iterable of parts and return it as a composition."""
    alpha = tuple(int(a) for a in parts)
    if any(a < 1 for a in alpha):
        raise ValueError("composition parts must be positive: %r" % (alpha,))
    return alpha


def parse_composition(text: str) -> Composition:
    """Parse the text form used by the CLI: comma-separated parts, "()" for
    the empty composition.

    >>> parse_composition("2,1,3"), parse_composition("()")
    ((2, 1, 3), ())
    """
    text = text.strip()
    if text in ("()", ""):
        return ()
    try:
        parts = [int(piece) for piece in text.split(",")]
    except ValueError:
        raise ValueError("cannot parse composition %r" % text) from None
    return composition(parts)


def format_composition(alpha: Composition) -> str:
    """Inverse of parse_composition."""
    if not alpha:
        return "()"
    return ",".join(str(a) for a in alpha)


def weight(alpha: Composition) -> int:
    return sum(alpha)


def to_index(alpha: Composition) -> int:
    """Bitmask of the proper partial sums of alpha (bit i-1 for sum i)."""
    mask = 0
    acc = 0
    for a in alpha[:-1]:
        acc += a
        mask |= 1 << (acc - 1)
    return mask


def from_index(n: int, mask: int) -> Composition:
    """Composition of n whose proper partial sums are the set bits of mask."""
    if n == 0:
        return ()
    parts = []
    prev = 0
    for i in range(1, n):
        if mask >> (i - 1) & 1:
            parts.append(i - prev)
            prev = i
    parts.append(n - prev)
    return tuple(parts)


def all_compositions(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n (one for n = 0), in increasing bitmask
    order.

    >>> all_compositions(3)
    [(3,), (1, 2), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return [()]
    return [from_index(n, mask) for mask in range(1 << (n - 1))]


class CompositionStats(NamedTuple):
    weight: int
    k: int          # number of parts
    k_e: int        # number of even parts
    k_o: int        # number of odd parts
    p_minus: int    # parts > 1 excluding the last
    p_plus: int     # 1 + (interior parts > 1), 0 for at most one part
    u: int          # parts > 1 excluding the first
    v: int          # parts > 1
    floor_sum: int  # sum of floor(part / 2)


def stats(alpha: Composition) -> CompositionStats:
    """All the part statistics used by the character formulas.

    ``p_minus`` counts the upper corners of the ribbon diagram; ``p_plus``
    counts them after an extra square is glued to the left of the first row.

    >>> s = stats((1, 3, 1, 2, 2))
    >>> s.p_minus, s.p_plus
    (2, 3)
    """
    k = len(alpha)
    k_e = sum(1 for a in alpha if a % 2 == 0)
    big = [i for i, a in enumerate(alpha) if a > 1]
    p_min = sum(1 for i in big if i != k - 1)
    p_plu = 1 + sum(1 for i in big if i not in (0, k - 1)) if k > 1 else 0
    return CompositionStats(
        weight=sum(alpha),
        k=k,
        k_e=k_e,
        k_o=k - k_e,
        p_minus=p_min,
        p_plus=p_plu,
        u=sum(1 for i in big if i != 0),
        v=len(big),
        floor_sum=sum(a // 2 for a in alpha),
    )


def p_minus(alpha: Composition) -> int:
    k = len(alpha)
    return sum(1 for i, a in enumerate(alpha) if a > 1 and i != k - 1)


def p_plus(alpha: Composition) -> int:
    k = len(alpha)
    if k <= 1:
        return 0
    return 1 + sum(1 for i, a in enumerate(alpha) if a > 1 and i not in (0, k - 1))


def refines(beta: Composition, alpha: Composition) -> bool:
    """True iff beta refines alpha (alpha is obtained by merging adjacent
    parts of beta); written beta >= alpha.  Compositions of different
    weights never refine each other.

    >>> refines((1, 1, 1), (3,)), refines((3,), (1, 1, 1))
    (True, False)
    """
    if sum(beta) != sum(alpha):
        return False
    a, b = to_index(alpha), to_index(beta)
    return a & b == a


def refinements(alpha: Composition) -> list[Composition]:
    """All beta with beta >= alpha (including alpha), in bitmask order."""
    n = sum(alpha)
    base = to_index(alpha)
    free = ((1 << max(n - 1, 0)) - 1) & ~base
    out = []
    sub = 0
    while True:
        out.append(from_index(n, base | sub))
        if sub == free:
            break
        sub = (sub - free) & free  # next subset of the free positions
    return out


def coarsenings(alpha: Composition) -> list[Composition]:
    """All beta with beta <= alpha (alpha refines beta), in bitmask order."""
    n = sum(alpha)
    base = to_index(alpha)
    out = []
    sub = 0
    while True:
        out.append(from_index(n, sub))
        if sub == base:
            break
        sub = (sub - base) & base
    return out


def reversal(alpha: Composition) -> Composition:
    return alpha[::-1]


def conjugate(alpha: Composition) -> Composition:
    """The composition of the ribbon diagram reflected across y = x:
    complement of the reversed partial-sum set.

    >>> conjugate((2, 3, 1, 2, 2))
    (1, 2, 3, 1, 2, 1)
    >>> conjugate((1, 1))
    (2,)
    """
    n = sum(alpha)
    if n <= 1:
        return alpha
    full = (1 << (n - 1)) - 1
    mask = to_index(alpha)
    rev = 0
    for i in range(n - 1):
        if mask >> i & 1:
            rev |= 1 << (n - 2 - i)
    return from_index(n, full & ~rev)


def deconcatenate(alpha: Composition, i: int) -> tuple[Composition, Composition]:
    """Split alpha after its first i parts."""
    if not 0 <= i <= len(alpha):
        raise ValueError("deconcatenation index %d out of range for %r" % (i, alpha))
    return alpha[:i], alpha[i:]


@lru_cache(maxsize=512)
def _delannoy_paths(p: int, q: int) -> tuple[LatticePath, ...]:
    if p == 0 and q == 0:
        return ((),)
    out: list[LatticePath] = []
    if p > 0:
        out.extend((HORIZONTAL,) + tail for tail in _delannoy_paths(p - 1, q))
    if q > 0:
        out.extend((VERTICAL,) + tail for tail in _delannoy_paths(p, q - 1))
    if p > 0 and q > 0:
        out.extend((DIAGONAL,) + tail for tail in _delannoy_paths(p - 1, q - 1))
    return tuple(out)


def delannoy_paths(p: int, q: int) -> list[LatticePath]:
    """All lattice paths from (0,0) to (p,q) with unit horizontal, vertical
    and diagonal steps, in a fixed (H < V < D at each point) order."""
    if p < 0 or q < 0:
        raise ValueError("endpoint coordinates must be non-negative")
    return list(_delannoy_paths(p, q))


def quasi_shuffle(alpha: Composition, beta: Composition, path: LatticePath) -> Composition:
    """Quasi-shuffle of alpha and beta along a Delannoy path: a horizontal
    step consumes the next part of alpha, a vertical step the next part of
    beta, a diagonal step consumes one of each and emits their sum."""
    out = []
    i = j = 0
    for step in path:
        if step == HORIZONTAL:
            out.append(alpha[i])
            i += 1
        elif step == VERTICAL:
            out.append(beta[j])
            j += 1
        elif step == DIAGONAL:
            out.append(alpha[i] + beta[j])
            i += 1
            j += 1
        else:
            raise ValueError("unknown step %r" % (step,))
    if i != len(alpha) or j != len(beta):
        raise ValueError(
            "path endpoint (%d, %d) does not match lengths (%d, %d)"
            % (i, j, len(alpha), len(beta))
        )
    return tuple(out)


class CutPair(NamedTuple):
    left: Composition
    right: Composition
    index: int


def ribbon_cuts(alpha: Composition) -> list[CutPair]:
    """The n+1 ways of cutting the ribbon diagram of alpha in two, reading
    the cut position 0..n along the ribbon.  A cut strictly inside a row of
    length a at offset t splits that row into a trailing row of t squares
    and a leading row of a - t squares; a cut at a row boundary splits
    between parts.

    >>> [(c.left, c.right) for c in ribbon_cuts((2,))]
    [((), (2,)), ((1,), (1,)), ((2,), ())]
    """
    n = sum(alpha)
    cuts = [CutPair((), alpha, 0)]
    acc = 0
    for j, a in enumerate(alpha):
        for t in range(1, a):
            cuts.append(CutPair(alpha[:j] + (t,), (a - t,) + alpha[j + 1:], acc + t))
        acc += a
        cuts.append(CutPair(alpha[: j + 1], alpha[j + 1:], acc))
    assert len(cuts) == n + 1
    return cuts

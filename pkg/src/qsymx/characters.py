"""Characters on quasi-symmetric functions: closed-form evaluators for the
canonical family, and the truncated convolution group used as an
independent oracle.

Closed forms and the oracle share no code on purpose.  The closed-form
evaluators are direct arithmetic in terms of bivariate Catalan numbers; the
oracle side only knows the universal character's defining values and the
convolution-group recursions

    (phi^-1)_n = - sum_{i=1..n} phi_i (phi^-1)_{n-i}

    (-1)^n phi_n = 2 (phi_+)_n + (phi^-1)_n
                   + sum_{i+j+k=n, i,j,k<n} (phi_+)_i (phi^-1)_j (phi_+)_k

    (phi_-)_n = phi_n - sum_{i=1..n} (phi_+)_i (phi_-)_{n-i}

with (phi^-1)_0 = (phi_+)_0 = (phi_-)_0 = counit.  Comparing the two sides
entrywise is the central acceptance test of the package.

Character ids are stable strings: "zeta", "zeta-plus", "zeta-minus",
"zeta-inv", "zeta-inv-plus", "zeta-inv-minus", "counit", "zeta-pow:<m>".
"""

from fractions import Fraction

from . import exactnum as en
from .compositions import (
    Composition,
    all_compositions,
    coarsenings,
    conjugate,
    from_index,
    p_minus,
    p_plus,
    refinements,
    reversal,
    stats,
    to_index,
)
from .permutations import Permutation, augmented_peaks, descent_set, interior_peaks
from .qsym import QSymElement

__all__ = [
    "ZETA",
    "ZETA_PLUS",
    "ZETA_MINUS",
    "ZETA_INV",
    "ZETA_INV_PLUS",
    "ZETA_INV_MINUS",
    "COUNIT",
    "CHARACTER_IDS",
    "zeta_power",
    "eval_M",
    "eval_F",
    "eval_element",
    "eval_perm",
    "TruncatedCharacter",
    "restrict",
    "convolve",
    "inverse",
    "bar",
    "decompose",
    "compose_antipode",
    "compose_T",
    "h_minus",
    "h_plus",
]

ZETA = "zeta"
ZETA_PLUS = "zeta-plus"
ZETA_MINUS = "zeta-minus"
ZETA_INV = "zeta-inv"
ZETA_INV_PLUS = "zeta-inv-plus"
ZETA_INV_MINUS = "zeta-inv-minus"
COUNIT = "counit"

CHARACTER_IDS = (
    ZETA,
    ZETA_PLUS,
    ZETA_MINUS,
    ZETA_INV,
    ZETA_INV_PLUS,
    ZETA_INV_MINUS,
    COUNIT,
)

_POW_PREFIX = "zeta-pow:"


def zeta_power(m: int) -> str:
    """Id of the m-th convolution power of the universal character."""
    return "%s%d" % (_POW_PREFIX, m)


def _parse_id(char_id: str):
    """Split an id into (kind, power); power is None except for zeta-pow."""
    if char_id in CHARACTER_IDS:
        return char_id, None
    if char_id.startswith(_POW_PREFIX):
        try:
            return "zeta-pow", int(char_id[len(_POW_PREFIX):])
        except ValueError:
            pass
    raise ValueError("unknown character id %r" % (char_id,))


def eval_M(char_id: str, alpha: Composition) -> Fraction:
    """Value of a closed-form character on the monomial basis element of
    alpha."""
    kind, power = _parse_id(char_id)
    k = len(alpha)
    if kind == "counit":
        return Fraction(1 if k == 0 else 0)
    if kind == "zeta":
        return Fraction(1 if k <= 1 else 0)
    if kind == "zeta-pow":
        return Fraction(en.falling_binomial(power, k))
    if kind == "zeta-inv":
        return Fraction(-1 if k % 2 else 1)
    if k == 0:
        return Fraction(1)

    st = stats(alpha)
    n = st.weight
    if kind == "zeta-minus":
        if alpha[-1] % 2 == 0:
            return Fraction(0)
        h = st.k_o // 2
        sign = -1 if st.k_e % 2 else 1
        return Fraction(sign * en.bivariate_catalan(0, h), 4 ** h)
    if kind == "zeta-plus":
        if n % 2:
            return Fraction(0)
        if k == 1:
            return Fraction(1)
        if alpha[0] % 2 and alpha[-1] % 2:
            sign = 1 if st.k_e % 2 else -1
            return Fraction(sign * en.bivariate_catalan(1, st.k_o // 2 - 1), 2 ** st.k_o)
        return Fraction(0)
    if kind == "zeta-inv-minus":
        if alpha[0] % 2 == 0:
            return Fraction(0)
        h = st.k_o // 2
        sign = -1 if k % 2 else 1
        return Fraction(sign * en.bivariate_catalan(0, h), 4 ** h)
    if kind == "zeta-inv-plus":
        if n % 2:
            return Fraction(0)
        sign = -1 if k % 2 else 1
        return Fraction(sign * en.bivariate_catalan(0, st.k_o // 2), 2 ** st.k_o)
    raise AssertionError(kind)


def eval_F(char_id: str, alpha: Composition) -> Fraction:
    """Value of a closed-form character on the fundamental basis element of
    alpha."""
    kind, power = _parse_id(char_id)
    n = sum(alpha)
    k = len(alpha)
    if kind == "counit":
        return Fraction(1 if k == 0 else 0)
    if kind == "zeta":
        return Fraction(1 if k <= 1 else 0)
    if kind == "zeta-pow":
        return Fraction(en.falling_binomial(power + n - k, n))
    if kind == "zeta-inv":
        if all(a == 1 for a in alpha):
            return Fraction(-1 if n % 2 else 1)
        return Fraction(0)
    if kind == "zeta-minus":
        p = p_minus(alpha)
        fl = n // 2
        sign = -1 if p % 2 else 1
        return Fraction(sign * en.bivariate_catalan(p, fl - p), 4 ** fl)
    if kind == "zeta-plus":
        if n % 2:
            return Fraction(0)
        q = p_plus(alpha)
        sign = -1 if q % 2 else 1
        return Fraction(sign * en.bivariate_catalan(q, n // 2 - q), 2 ** n)
    if kind == "zeta-inv-minus":
        p = p_minus(reversal(alpha))
        fl = n // 2
        sign = -1 if (n + p) % 2 else 1
        return Fraction(sign * en.bivariate_catalan(p, fl - p), 4 ** fl)
    if kind == "zeta-inv-plus":
        if n % 2:
            return Fraction(0)
        q = p_plus(conjugate(alpha))
        sign = -1 if q % 2 else 1
        return Fraction(sign * en.bivariate_catalan(q, n // 2 - q), 2 ** n)
    raise AssertionError(kind)


def eval_element(char_id: str, x: QSymElement) -> Fraction:
    """Linear extension to an arbitrary element, dispatching on its basis."""
    evaluate = eval_M if x.basis == "M" else eval_F
    total = Fraction(0)
    for alpha, c in x.coeffs.items():
        total += c * evaluate(char_id, alpha)
    return total


def eval_perm(char_id: str, sigma: Permutation) -> Fraction:
    """Value of the pulled-back character on the permutation basis element
    F_sigma, via peak statistics.  Supported ids: zeta, zeta-minus,
    zeta-plus."""
    kind, _ = _parse_id(char_id)
    n = len(sigma)
    if kind == "zeta":
        return Fraction(1 if not descent_set(sigma) else 0)
    if kind == "zeta-minus":
        p = interior_peaks(sigma)
        fl = n // 2
        sign = -1 if p % 2 else 1
        return Fraction(sign * en.bivariate_catalan(p, fl - p), 4 ** fl)
    if kind == "zeta-plus":
        if n % 2:
            return Fraction(0)
        q = augmented_peaks(sigma)
        sign = -1 if q % 2 else 1
        return Fraction(sign * en.bivariate_catalan(q, n // 2 - q), 2 ** n)
    raise ValueError("eval_perm does not support character id %r" % (char_id,))


class TruncatedCharacter:
    """A linear functional on QSym truncated at degree N, stored as one
    dense table of monomial-basis values per degree (table n has one entry
    per composition of n, indexed by partial-sum bitmask)."""

    __slots__ = ("max_degree", "tables")

    def __init__(self, max_degree: int, tables):
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        tables = tuple(tuple(Fraction(v) for v in row) for row in tables)
        if len(tables) != max_degree + 1:
            raise ValueError("expected %d degree tables" % (max_degree + 1,))
        for n, row in enumerate(tables):
            want = 1 if n == 0 else 1 << (n - 1)
            if len(row) != want:
                raise ValueError("degree-%d table must have %d entries" % (n, want))
        self.max_degree = max_degree
        self.tables = tables

    @classmethod
    def tabulate(cls, max_degree: int, fn) -> "TruncatedCharacter":
        tables = [
            [fn(alpha) for alpha in all_compositions(n)]
            for n in range(max_degree + 1)
        ]
        return cls(max_degree, tables)

    def value(self, alpha) -> Fraction:
        alpha = tuple(alpha)
        n = sum(alpha)
        if n > self.max_degree:
            raise ValueError(
                "composition of weight %d exceeds truncation %d" % (n, self.max_degree)
            )
        return self.tables[n][to_index(alpha)]

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedCharacter)
            and self.max_degree == other.max_degree
            and self.tables == other.tables
        )

    def __repr__(self):
        return "TruncatedCharacter(N=%d)" % self.max_degree


def restrict(char_id: str, max_degree: int) -> TruncatedCharacter:
    """Tabulate a closed-form character on every composition of every
    degree up to max_degree."""
    return TruncatedCharacter.tabulate(max_degree, lambda a: eval_M(char_id, a))


def _require_same_degree(phi: TruncatedCharacter, psi: TruncatedCharacter):
    if phi.max_degree != psi.max_degree:
        raise ValueError(
            "truncation degrees differ: %d vs %d" % (phi.max_degree, psi.max_degree)
        )


def convolve(phi: TruncatedCharacter, psi: TruncatedCharacter) -> TruncatedCharacter:
    """Convolution product: on M_alpha, the sum over deconcatenations
    alpha = (first i parts | rest) of phi(left) psi(right)."""
    _require_same_degree(phi, psi)
    tables = []
    for n in range(phi.max_degree + 1):
        row = []
        for alpha in all_compositions(n):
            total = Fraction(0)
            for i in range(len(alpha) + 1):
                total += phi.value(alpha[:i]) * psi.value(alpha[i:])
            row.append(total)
        tables.append(row)
    return TruncatedCharacter(phi.max_degree, tables)


def inverse(phi: TruncatedCharacter) -> TruncatedCharacter:
    """Convolution inverse, by the degree recursion; requires phi(1) = 1."""
    if phi.value(()) != 1:
        raise ValueError("inverse requires phi(1) = 1")
    tables: list[list[Fraction]] = [[Fraction(1)]]

    def inv_value(alpha):
        return tables[sum(alpha)][to_index(alpha)]

    for n in range(1, phi.max_degree + 1):
        row = []
        for alpha in all_compositions(n):
            total = Fraction(0)
            for i in range(1, len(alpha) + 1):
                total += phi.value(alpha[:i]) * inv_value(alpha[i:])
            row.append(-total)
        tables.append(row)
    return TruncatedCharacter(phi.max_degree, tables)


def bar(phi: TruncatedCharacter) -> TruncatedCharacter:
    """The degree-sign involution: degree-n values pick up (-1)^n."""
    tables = [
        [(-v if n % 2 else v) for v in row] for n, row in enumerate(phi.tables)
    ]
    return TruncatedCharacter(phi.max_degree, tables)


def decompose(phi: TruncatedCharacter):
    """Split phi (with phi(1) = 1) into its even and odd parts, returning
    (phi_plus, phi_minus) with phi = phi_plus * phi_minus in convolution.

    This is the oracle: it uses only phi's own values, the inverse
    recursion, and the two decomposition recursions, never the closed
    forms.  The division by 2 is exact over the rationals.
    """
    if phi.value(()) != 1:
        raise ValueError("decompose requires phi(1) = 1")
    n_max = phi.max_degree
    phi_inv = inverse(phi)

    plus_tables: list[list[Fraction]] = [[Fraction(1)]]

    def plus_value(alpha):
        return plus_tables[sum(alpha)][to_index(alpha)]

    for n in range(1, n_max + 1):
        row = []
        for alpha in all_compositions(n):
            k = len(alpha)
            corr = Fraction(0)
            # all three-fold splits alpha = left|mid|right by parts, with
            # no piece carrying the whole weight n
            for s in range(k + 1):
                left = alpha[:s]
                if sum(left) == n:
                    continue
                pl = plus_value(left)
                if not pl:
                    continue
                for t in range(s, k + 1):
                    mid = alpha[s:t]
                    right = alpha[t:]
                    if sum(mid) == n or sum(right) == n:
                        continue
                    corr += pl * phi_inv.value(mid) * plus_value(right)
            signed_phi = phi.value(alpha)
            if n % 2:
                signed_phi = -signed_phi
            row.append((signed_phi - phi_inv.value(alpha) - corr) / 2)
        plus_tables.append(row)
    phi_plus = TruncatedCharacter(n_max, plus_tables)

    minus_tables: list[list[Fraction]] = [[Fraction(1)]]

    def minus_value(alpha):
        return minus_tables[sum(alpha)][to_index(alpha)]

    for n in range(1, n_max + 1):
        row = []
        for alpha in all_compositions(n):
            total = Fraction(0)
            for i in range(1, len(alpha) + 1):
                left = alpha[:i]
                total += phi_plus.value(left) * minus_value(alpha[i:])
            row.append(phi.value(alpha) - total)
        minus_tables.append(row)
    phi_minus = TruncatedCharacter(n_max, minus_tables)

    return phi_plus, phi_minus


def compose_antipode(phi: TruncatedCharacter) -> TruncatedCharacter:
    """phi composed with the antipode: on M_alpha this is (-1)^(k(alpha))
    times the sum of phi over all coarsenings of the reversal of alpha."""
    tables = []
    for n in range(phi.max_degree + 1):
        row = []
        for alpha in all_compositions(n):
            total = Fraction(0)
            for gamma in coarsenings(reversal(alpha)):
                total += phi.value(gamma)
            row.append(-total if len(alpha) % 2 else total)
        tables.append(row)
    return TruncatedCharacter(phi.max_degree, tables)


def compose_T(phi: TruncatedCharacter) -> TruncatedCharacter:
    """phi composed with the reversal involution T."""
    tables = []
    for n in range(phi.max_degree + 1):
        size = 1 if n == 0 else 1 << (n - 1)
        row = [
            phi.tables[n][to_index(reversal(from_index(n, mask)))]
            for mask in range(size)
        ]
        tables.append(row)
    return TruncatedCharacter(phi.max_degree, tables)


def h_minus(alpha: Composition) -> Fraction:
    """The definitional alternating sum over refinements beta of alpha of
    (-1)^(k(beta) + p_minus(beta) + 1) C(p_minus(beta), floor(n/2) - p_minus(beta))."""
    n = sum(alpha)
    fl = n // 2
    total = Fraction(0)
    for beta in refinements(alpha):
        p = p_minus(beta)
        sign = -1 if (len(beta) + p + 1) % 2 else 1
        total += sign * en.bivariate_catalan(p, fl - p)
    return total


def h_plus(alpha: Composition) -> Fraction:
    """Companion sum with the augmented peak statistic; the weight of alpha
    must be even."""
    n = sum(alpha)
    if n % 2:
        raise ValueError("h_plus requires even weight, got %d" % n)
    half = n // 2
    total = Fraction(0)
    for beta in refinements(alpha):
        q = p_plus(beta)
        sign = -1 if (len(beta) + q + 1) % 2 else 1
        total += sign * en.bivariate_catalan(q, half - q)
    return total

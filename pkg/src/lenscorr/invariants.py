"""Casson-Walker invariant, integrality, divisibility obstructions, vanishing
correction terms and the Dehn-surgery extensions.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .correction import (
    CorrectionTable,
    LensSpace,
    conjugate_spinc,
    conjugation_classes,
    d_closed,
    d_table,
    normalize_lens,
    self_conjugate_labels,
)
from .dedekind import dedekind_sum


def casson_walker(lens: LensSpace) -> Fraction:
    """lambda(L(p, q)) = s(q, p), negated for a reversed orientation."""
    if lens.p == 1:
        return Fraction(0)
    return lens.sign * dedekind_sum(lens.q, lens.p)


def average_d(lens: LensSpace, table: CorrectionTable | None = None) -> Fraction:
    """Mean of d(L, n) over all p labels."""
    if table is None:
        table = d_table(lens)
    return table.average


def check_integrality(lens: LensSpace, table: CorrectionTable | None = None) -> bool:
    """Whether 2p * d(L, n) is an integer for every label."""
    if table is None:
        table = d_table(lens)
    return table.is_integral()


def _equal_divisibility(lens, n1, n2):
    return (2 * (n1 - n2) * (n1 + n2 - lens.q + 1)) % lens.p == 0


def _opposite_divisibility(lens, n1, n2):
    return ((n1 - n2) ** 2 + (n1 + n2 - lens.q + 1) ** 2) % lens.p == 0


@dataclass(frozen=True)
class DivisibilityCheck:
    """Outcome of the equal/opposite divisibility test for one label pair.

    ``*_fired`` says whether d(n1) = d(n2) (resp. -d(n2)) holds; ``*_holds``
    is the divisibility verdict, only meaningful when the hypothesis fired.
    """

    n1: int
    n2: int
    equal_fired: bool
    equal_holds: bool
    opposite_fired: bool
    opposite_holds: bool

    @property
    def ok(self) -> bool:
        return (not self.equal_fired or self.equal_holds) and (not self.opposite_fired or self.opposite_holds)


def theorem2_divisibility(lens: LensSpace, n1: int, n2: int, table: CorrectionTable | None = None) -> DivisibilityCheck:
    """Test the two divisibility consequences of d(n1) = +/- d(n2).

    If d(n1) = d(n2) then p | 2(n1 - n2)(n1 + n2 - q + 1); if d(n1) = -d(n2)
    then p | (n1 - n2)^2 + (n1 + n2 - q + 1)^2.
    """
    if table is None:
        table = d_table(lens)
    n1, n2 = n1 % lens.p, n2 % lens.p
    a, b = table[n1], table[n2]
    return DivisibilityCheck(
        n1,
        n2,
        equal_fired=a == b,
        equal_holds=_equal_divisibility(lens, n1, n2),
        opposite_fired=a == -b,
        opposite_holds=_opposite_divisibility(lens, n1, n2),
    )


def theorem2_violations(lens: LensSpace, table: CorrectionTable | None = None) -> list[DivisibilityCheck]:
    """All ordered label pairs whose d-values are equal or opposite but fail
    the matching divisibility. Pairs are found by grouping equal values, so
    the cost is linear in p plus the number of coincidences.
    """
    if table is None:
        table = d_table(lens)
    groups = defaultdict(list)
    for n, v in enumerate(table):
        groups[v].append(n)
    bad = []
    for v, labels in groups.items():
        partners = set(labels) | set(groups.get(-v, ()))
        for n1 in labels:
            for n2 in sorted(partners):
                check = theorem2_divisibility(lens, n1, n2, table)
                if not check.ok:
                    bad.append(check)
    return bad


def vanishing_spinc(lens: LensSpace, table: CorrectionTable | None = None) -> list[int]:
    """Labels n with d(L, n) = 0, ascending."""
    if table is None:
        table = d_table(lens)
    return table.zeros


@dataclass
class ObstructionReport:
    lens: LensSpace
    zero_labels: list[int]
    image_cardinality_mod_conjugation: int
    conjugation_class_count: int
    theorem2_violations: list[DivisibilityCheck] = field(default_factory=list)
    # Checks that only apply for prime p; None when p is not prime.
    injective_on_classes: bool | None = None
    zeros_only_at_spin: bool | None = None

    @property
    def ok(self) -> bool:
        return not self.theorem2_violations and self.injective_on_classes is not False and self.zeros_only_at_spin is not False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def injectivity_report(lens: LensSpace, table: CorrectionTable | None = None) -> ObstructionReport:
    """Image size of n -> d(L, n) on conjugation classes plus the prime-order checks.

    For prime p the map must be injective on classes; for odd prime p a zero
    may only occur at the self-conjugate label.
    """
    if table is None:
        table = d_table(lens)
    classes = conjugation_classes(lens)
    image = {table[c[0]] for c in classes}
    report = ObstructionReport(
        lens=lens,
        zero_labels=table.zeros,
        image_cardinality_mod_conjugation=len(image),
        conjugation_class_count=len(classes),
        theorem2_violations=theorem2_violations(lens, table),
    )
    if is_prime(lens.p):
        report.injective_on_classes = len(image) == len(classes)
        if lens.p % 2:
            spin = set(self_conjugate_labels(lens))
            report.zeros_only_at_spin = set(report.zero_labels) <= spin
    return report


# -- Dehn surgery on knots ---------------------------------------------------


@dataclass(frozen=True)
class AlexanderPolynomial:
    """Symmetric Alexander polynomial a_0 + sum_{j>0} a_j (t^j + t^-j).

    ``coeffs`` is (a_0, a_1, ..., a_m); a_m must be nonzero for m >= 1 and
    Delta(1) = a_0 + 2 sum a_j must be +/-1.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(a) for a in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise ValueError("Alexander polynomial needs at least one coefficient")
        if len(coeffs) > 1 and coeffs[-1] == 0:
            raise ValueError("leading coefficient a_m must be nonzero")
        if self.at_one() not in (1, -1):
            raise ValueError("Alexander polynomial must satisfy Δ(1)=±1")

    @classmethod
    def parse(cls, text: str) -> "AlexanderPolynomial":
        """From a comma-separated list such as ``"-1,1"`` (the trefoil)."""
        try:
            coeffs = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse Alexander coefficients {text!r}") from None
        return cls(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, j: int) -> int:
        j = abs(j)
        return self.coeffs[j] if j < len(self.coeffs) else 0

    def at_one(self) -> int:
        return self.coeffs[0] + 2 * sum(self.coeffs[1:])

    def second_derivative_at_one(self) -> int:
        # d^2/dt^2 (t^j + t^-j) at t = 1 is 2 j^2
        return sum(2 * j * j * a for j, a in enumerate(self.coeffs) if j)


UNKNOT = AlexanderPolynomial((1,))
TREFOIL = AlexanderPolynomial((-1, 1))


def torsion_coefficient(alex: AlexanderPolynomial, i: int) -> int:
    """t_i = sum_{j>=1} j * a_{|i|+j}."""
    i = abs(i)
    return sum(j * alex.coefficient(i + j) for j in range(1, alex.degree - i + 1))


def _surgery_lens(p: int, q: int) -> LensSpace:
    if p < 1 or q < 1:
        raise ValueError(f"need positive p and q, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p and q must be coprime, got p={p}, q={q}")
    return normalize_lens(p, q)


def d_surgery(p: int, q: int, n: int, alex: AlexanderPolynomial) -> Fraction:
    """d(S^3_{p/q}(K), n) = d(L(p, q), n) - 2 t_{floor(|n|/q)}(K).

    Valid for L-space knots, which is not checked. The lens-space term uses
    n mod p; the torsion index uses |n| exactly as given.
    """
    lens = _surgery_lens(p, q)
    return d_closed(lens, n % p) - 2 * torsion_coefficient(alex, abs(n) // q)


def d_surgery_table(p: int, q: int, alex: AlexanderPolynomial) -> list[Fraction]:
    """d_surgery for n = 0..p-1."""
    table = d_table(_surgery_lens(p, q))
    return [table[n] - 2 * torsion_coefficient(alex, n // q) for n in range(p)]


def casson_walker_surgery(p: int, q: int, alex: AlexanderPolynomial) -> Fraction:
    """lambda(S^3_{p/q}(K)) = lambda(L(p, q)) - (q/p) Delta''(1)."""
    lens = _surgery_lens(p, q)
    return casson_walker(lens) - Fraction(q, p) * alex.second_derivative_at_one()

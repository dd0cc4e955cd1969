"""Root-system and Weyl-group facts for the classical families A, B, C, D.

Weights are plain integer tuples in the epsilon-coordinate basis: length
``n`` for families B, C and D, length ``n + 1`` for family A. Two type-A
tuples describe the same weight exactly when they differ by a constant
shift; the canonical representative subtracts the minimum coordinate so
that it can serve as a dictionary key.

Orbit generation for B/C/D uses the full hyperoctahedral group
W_n = Sym(n) x {+-1}^n (signed permutations). For family D this strictly
contains the Weyl group, which only allows an even number of sign flips;
that is deliberate and multiplicity-safe for the highest weights handled
by this package (k*e1 + l*e2 with n >= 3), where the mirror weight
(a_1, ..., -a_n) always carries the same multiplicity as
(a_1, ..., a_n). True Weyl-group canonical forms, needed by exact
recursions, are available separately as :func:`weyl_canonical`.
"""

from dataclasses import dataclass
from math import factorial
from typing import Iterator, Optional, Sequence, Tuple

from .errors import InvalidHighestWeight, LengthMismatch, NotDominant, RankOutOfRange

Weight = Tuple[int, ...]

_MIN_RANK = {"A": 2, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True)
class AlgebraSpec:
    """A classical family label (A/B/C/D) together with the rank n."""

    family: str
    rank: int


def validate(spec: AlgebraSpec) -> None:
    """Check the family label and the rank bounds (B/C/A need n >= 2, D needs n >= 3)."""
    if spec.family not in _MIN_RANK:
        raise RankOutOfRange(f"unknown family {spec.family!r}; expected one of A, B, C, D")
    low = _MIN_RANK[spec.family]
    if spec.rank < low:
        raise RankOutOfRange(
            f"rank out of range: family {spec.family} requires n >= {low}, got n = {spec.rank}"
        )


def algebra(family: str, rank: int) -> AlgebraSpec:
    """Build and validate an algebra descriptor."""
    spec = AlgebraSpec(str(family).upper(), int(rank))
    validate(spec)
    return spec


def weight_length(spec: AlgebraSpec) -> int:
    return spec.rank + 1 if spec.family == "A" else spec.rank


def check_weight(spec: AlgebraSpec, mu: Sequence[int]) -> Weight:
    """Coerce ``mu`` to an integer tuple of the correct length."""
    coords = tuple(int(a) for a in mu)
    expect = weight_length(spec)
    if len(coords) != expect:
        raise LengthMismatch(
            f"length mismatch: family {spec.family} rank {spec.rank} weights "
            f"have {expect} coordinates, got {len(coords)}"
        )
    return coords


def canonical_weight(spec: AlgebraSpec, mu: Sequence[int]) -> Weight:
    """Canonical tuple usable as a dict key (type A: minimum coordinate 0)."""
    coords = check_weight(spec, mu)
    if spec.family == "A":
        low = min(coords)
        if low:
            coords = tuple(a - low for a in coords)
    return coords


def highest_weight(spec: AlgebraSpec, k: int, l: int) -> Weight:
    """Coordinates of k*e1 + l*e2 (k >= l >= 0)."""
    if not (k >= l >= 0):
        raise InvalidHighestWeight(f"need k >= l >= 0, got k = {k}, l = {l}")
    return (k, l) + (0,) * (weight_length(spec) - 2)


def one_norm(mu: Sequence[int]) -> int:
    return sum(abs(a) for a in mu)


def weight_stats(spec: AlgebraSpec, mu: Sequence[int], l: int) -> Tuple[int, Tuple[int, ...]]:
    """One-norm of ``mu`` and the level counts (l_0, ..., l_{l-1}).

    l_t counts coordinates of absolute value t; for family A absolute
    values are taken after normalizing the minimum coordinate to 0, so
    they are plain values.
    """
    coords = canonical_weight(spec, mu)
    counts = [0] * max(l, 0)
    for a in coords:
        v = abs(a)
        if v < l:
            counts[v] += 1
    return one_norm(coords), tuple(counts)


def dominant_representative(spec: AlgebraSpec, mu: Sequence[int]) -> Weight:
    """W_n-canonical form: absolute values sorted weakly decreasing.

    For family A the coordinates themselves (shift-normalized) are
    sorted. For family D this is the canonical form under the full
    hyperoctahedral group, which identifies a weight with its mirror.
    """
    coords = canonical_weight(spec, mu)
    if spec.family == "A":
        return tuple(sorted(coords, reverse=True))
    return tuple(sorted((abs(a) for a in coords), reverse=True))


def weyl_canonical(spec: AlgebraSpec, mu: Sequence[int]) -> Weight:
    """Canonical form under the actual Weyl group of the family.

    Identical to :func:`dominant_representative` except for family D,
    where only an even number of sign flips is allowed: with no zero
    coordinate available to absorb parity, an odd number of negative
    entries leaves a minus sign on the smallest coordinate.
    """
    coords = canonical_weight(spec, mu)
    if spec.family == "A":
        return tuple(sorted(coords, reverse=True))
    body = sorted((abs(a) for a in coords), reverse=True)
    if spec.family == "D":
        negatives = sum(1 for a in coords if a < 0)
        if negatives % 2 and body[-1] != 0:
            body[-1] = -body[-1]
    return tuple(body)


def is_dominant(spec: AlgebraSpec, mu: Sequence[int]) -> bool:
    """Dominance in the family's own sense.

    B/C: weakly decreasing and non-negative; D: weakly decreasing down to
    ``a_{n-1} >= |a_n|``; A: weakly decreasing coordinates.
    """
    coords = check_weight(spec, mu)
    fam = spec.family
    if fam == "A":
        return all(coords[i] >= coords[i + 1] for i in range(len(coords) - 1))
    if any(coords[i] < coords[i + 1] for i in range(len(coords) - 1)):
        return False
    if fam == "D":
        return len(coords) < 2 or coords[-2] >= abs(coords[-1])
    return coords[-1] >= 0


def _distinct_permutations(items: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    # multiset permutations, lexicographically descending from the sorted input
    pool = sorted(items, reverse=True)
    n = len(pool)
    if n == 0:
        yield ()
        return
    current = list(pool)
    while True:
        yield tuple(current)
        # next permutation in descending lex order
        i = n - 2
        while i >= 0 and current[i] <= current[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while current[j] >= current[i]:
            j -= 1
        current[i], current[j] = current[j], current[i]
        current[i + 1:] = sorted(current[i + 1:], reverse=True)


def orbit(spec: AlgebraSpec, mu: Sequence[int]) -> Tuple[Weight, ...]:
    """Full orbit of a dominant weight, sorted lexicographically.

    B/C/D: all signed permutations of the coordinates (group W_n);
    A: all permutations of the normalized coordinates. Duplicates from
    zero or repeated coordinates are never produced twice.
    """
    coords = check_weight(spec, mu)
    decreasing = all(coords[i] >= coords[i + 1] for i in range(len(coords) - 1))
    if not decreasing or (spec.family != "A" and coords[-1] < 0):
        raise NotDominant(f"weight {coords} is not a sorted non-negative representative")
    if spec.family == "A":
        return tuple(sorted(_distinct_permutations(coords)))
    out = []
    for perm in _distinct_permutations(coords):
        hot = [i for i, a in enumerate(perm) if a]
        signed = [perm]
        for i in hot:
            signed = [v[:i] + (sign * v[i],) + v[i + 1:] for v in signed for sign in (1, -1)]
        out.extend(signed)
    return tuple(sorted(out))


def _perm_count(values: Sequence[int]) -> int:
    counts = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    total = factorial(len(values))
    for c in counts.values():
        total //= factorial(c)
    return total


def orbit_size(spec: AlgebraSpec, mu: Sequence[int]) -> int:
    """Size of the orbit produced by :func:`orbit`, computed without enumeration."""
    coords = canonical_weight(spec, mu)
    if spec.family == "A":
        return _perm_count(coords)
    body = [abs(a) for a in coords]
    nonzero = sum(1 for a in body if a)
    return _perm_count(body) << nonzero


def weyl_orbit_size(spec: AlgebraSpec, mu: Sequence[int]) -> int:
    """Orbit size under the actual Weyl group.

    Differs from :func:`orbit_size` only for family D weights with no
    zero coordinate, whose hyperoctahedral orbit splits into the orbit of
    the weight and the orbit of its mirror.
    """
    size = orbit_size(spec, mu)
    if spec.family == "D" and all(a != 0 for a in check_weight(spec, mu)):
        size //= 2
    return size


def positive_roots(spec: AlgebraSpec) -> Tuple[Weight, ...]:
    """Positive roots as coordinate tuples (length n, or n+1 for A)."""
    n = spec.rank
    fam = spec.family
    roots = []
    if fam == "A":
        m = n + 1
        for i in range(m):
            for j in range(i + 1, m):
                root = [0] * m
                root[i], root[j] = 1, -1
                roots.append(tuple(root))
        return tuple(roots)
    for i in range(n):
        for j in range(i + 1, n):
            minus = [0] * n
            minus[i], minus[j] = 1, -1
            roots.append(tuple(minus))
            plus = [0] * n
            plus[i], plus[j] = 1, 1
            roots.append(tuple(plus))
    if fam == "B":
        for i in range(n):
            short = [0] * n
            short[i] = 1
            roots.append(tuple(short))
    elif fam == "C":
        for i in range(n):
            lng = [0] * n
            lng[i] = 2
            roots.append(tuple(lng))
    return tuple(roots)


def simple_roots(spec: AlgebraSpec) -> Tuple[Weight, ...]:
    """Simple roots in the standard ordering for each family."""
    n = spec.rank
    fam = spec.family
    out = []
    length = weight_length(spec)
    for i in range(n - 1):
        root = [0] * length
        root[i], root[i + 1] = 1, -1
        out.append(tuple(root))
    last = [0] * length
    if fam == "A":
        last[n - 1], last[n] = 1, -1
    elif fam == "B":
        last[n - 1] = 1
    elif fam == "C":
        last[n - 1] = 2
    else:  # D
        last[n - 2], last[n - 1] = 1, 1
    out.append(tuple(last))
    return tuple(out)


def rho_twice(spec: AlgebraSpec) -> Weight:
    """Twice the half-sum of positive roots, as an integer tuple.

    For family A this is a representative of the shift class (2n, 2n-2,
    ..., 0); the half-sum itself is half-integral for B.
    """
    n = spec.rank
    fam = spec.family
    if fam == "A":
        return tuple(2 * (n - i) for i in range(n + 1))
    if fam == "B":
        return tuple(2 * (n - i) - 1 for i in range(n))
    if fam == "C":
        return tuple(2 * (n - i) for i in range(n))
    return tuple(2 * (n - i - 1) for i in range(n))


def normalize_a_to_sum(coords: Sequence[int], target: int) -> Optional[Weight]:
    """Shift a type-A coordinate tuple so its sum equals ``target``.

    Returns None when no shifted representative has the required sum
    (the defect is only defined modulo the number of coordinates) or when
    the matching representative has a negative coordinate.
    """
    coords = tuple(int(a) for a in coords)
    m = len(coords)
    delta = target - sum(coords)
    if delta % m:
        return None
    t = delta // m
    shifted = tuple(a + t for a in coords)
    if any(b < 0 for b in shifted):
        return None
    return shifted


def weyl_dimension(spec: AlgebraSpec, k: int, l: int) -> int:
    """Dimension of the irreducible with highest weight k*e1 + l*e2.

    Product formula over positive roots, evaluated in exact integer
    arithmetic (the half-integral half-sum for B is cleared by doubling).
    """
    validate(spec)
    lam = highest_weight(spec, k, l)
    rho2 = rho_twice(spec)
    top = tuple(2 * a + r for a, r in zip(lam, rho2))
    num = 1
    den = 1
    for root in positive_roots(spec):
        num *= sum(t * c for t, c in zip(top, root) if c)
        den *= sum(r * c for r, c in zip(rho2, root) if c)
    if num % den:
        raise AssertionError("Weyl dimension did not come out integral")
    return num // den

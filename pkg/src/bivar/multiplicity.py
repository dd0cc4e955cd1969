"""Weight multiplicity formulas for highest weights k*e1 + l*e2.

The general entry point is :func:`bivariate_mult`. For families B, C, D
it combines four partition-indexed tensor sums (evaluated by the kernel
backend); for family A it combines two. Closed-form fast paths cover the
single-row case, l = 0/1/2 and the zero weight.

Depth arguments are carried as doubled integers (``r2``), never floats:
the depth (k + l - |mu|)/2 is genuinely half-integral for family B.
"""

from fractions import Fraction

from . import kernel
from .errors import InvalidHighestWeight
from .partitions import binom, count_one_norm_sphere
from .root_systems import (
    AlgebraSpec,
    algebra,
    check_weight,
    normalize_a_to_sum,
    one_norm,
    validate,
    weight_stats,
)


def _require_kl(k: int, l: int) -> None:
    if not (k >= l >= 0):
        raise InvalidHighestWeight(f"need k >= l >= 0, got k = {k}, l = {l}")


def single_row_mult(spec: AlgebraSpec, k: int, mu) -> int:
    """Multiplicity of ``mu`` in the representation with highest weight k*e1.

    Closed forms per family; zero whenever the depth (k - |mu|)/2 is
    negative, or fails to be an integer for C and D.
    """
    validate(spec)
    if k < 0:
        raise InvalidHighestWeight(f"need k >= 0, got k = {k}")
    mu = check_weight(spec, mu)
    n = spec.rank
    fam = spec.family
    if fam == "A":
        return 1 if normalize_a_to_sum(mu, k) is not None else 0
    r2 = k - one_norm(mu)
    if fam == "B":
        return binom(r2 // 2 + n - 1, n - 1)
    if r2 < 0 or r2 % 2:
        return 0
    d = n - 1 if fam == "C" else n - 2
    return binom(r2 // 2 + d, d)


def _stats_bcd(spec: AlgebraSpec, mu, l: int):
    norm, ell = weight_stats(spec, mu, l)
    return norm, ell


def _level_counts(rep, l: int):
    # counts of coordinates equal to t, taken on the representative as given
    # (for family A the formula wants the representative whose sum is k + l,
    # which is generally not the shift-canonical one)
    counts = [0] * max(l, 0)
    for b in rep:
        if 0 <= b < l:
            counts[b] += 1
    return tuple(counts)


def tensor_mult(spec: AlgebraSpec, k: int, l: int, mu) -> int:
    """Multiplicity of ``mu`` in the tensor product pi_{k e1} (x) pi_{l e1}."""
    validate(spec)
    _require_kl(k, l)
    mu = check_weight(spec, mu)
    n = spec.rank
    fam = spec.family
    if fam == "A":
        rep = normalize_a_to_sum(mu, k + l)
        if rep is None:
            return 0
        return kernel.tensor_sum_a(n, l, _level_counts(rep, l))
    norm, ell = _stats_bcd(spec, mu, l)
    r2 = k + l - norm
    if r2 < 0:
        return 0
    if fam == "B":
        return kernel.tensor_sum_bcd(n, n - 1, l, r2, ell, 1)
    if r2 % 2:
        return 0
    d = n - 1 if fam == "C" else n - 2
    return kernel.tensor_sum_bcd(n, d, l, r2, ell, 2)


def bivariate_mult(spec: AlgebraSpec, k: int, l: int, mu) -> int:
    """Multiplicity of ``mu`` in the irreducible with highest weight k*e1 + l*e2."""
    validate(spec)
    _require_kl(k, l)
    mu = check_weight(spec, mu)
    n = spec.rank
    fam = spec.family
    if fam == "A":
        rep = normalize_a_to_sum(mu, k + l)
        if rep is None or max(rep) > k:
            return 0
        ell = _level_counts(rep, l)
        return kernel.tensor_sum_a(n, l, ell) - kernel.tensor_sum_a(n, l - 1, ell)

    norm, ell = _stats_bcd(spec, mu, l)
    r2 = k + l - norm
    if r2 < 0:
        return 0
    if fam == "B":
        d, step = n - 1, 1
    else:
        if r2 % 2:
            return 0
        d = n - 1 if fam == "C" else n - 2
        step = 2
    # virtual-ring combination: the four tensor factors at depths r, r, r-1, r-1
    return (
        kernel.tensor_sum_bcd(n, d, l, r2, ell, step)
        - kernel.tensor_sum_bcd(n, d, l - 1, r2, ell, step)
        - kernel.tensor_sum_bcd(n, d, l - 1, r2 - 2, ell, step)
        + kernel.tensor_sum_bcd(n, d, l - 2, r2 - 2, ell, step)
    )


def zero_weight_mult(spec: AlgebraSpec, k: int, l: int) -> int:
    """Zero-weight multiplicity via the closed single-sum expressions (B/C/D)."""
    validate(spec)
    _require_kl(k, l)
    n = spec.rank
    fam = spec.family
    if fam == "A":
        raise ValueError("the zero-weight closed form covers families B, C, D only")
    if fam != "B" and (k + l) % 2:
        return 0
    total = Fraction(0)
    for upper in range(l + 1):
        sign = -1 if (upper + l) % 2 else 1
        sphere = count_one_norm_sphere(n, upper)
        if fam == "B":
            half_l = (l - upper) // 2
            half_k = (k + 1 - upper) // 2
            if (k + l) % 2 == 0:
                factor = 1 - Fraction(half_l * half_k,
                                      (half_l + n - 1) * (half_k + n - 1))
            else:
                factor = (Fraction(half_k, half_k + n - 1)
                          - Fraction(half_l, half_l + n - 1))
            total += sign * factor * binom(half_l + n - 1, n - 1) \
                * binom(half_k + n - 1, n - 1) * sphere
        else:
            # C uses the D-style correction at rank n+1 and degree n-1
            m = n + 1 if fam == "C" else n
            d = n - 1 if fam == "C" else n - 2
            if (upper + l) % 2 == 0:
                factor = Fraction(l - upper + m - 2, l - upper + 2 * m - 4)
            else:
                factor = Fraction(k + 1 - upper + m - 2, k + 1 - upper + 2 * m - 4)
            total += 2 * sign * factor * binom((l - upper) // 2 + d, d) \
                * binom((k - upper + 1) // 2 + d, d) * sphere
    if total.denominator != 1:
        raise AssertionError("zero-weight sum did not come out integral")
    return int(total)


def l1_mult(spec: AlgebraSpec, k: int, mu) -> int:
    """Fast path for l = 1, agreeing with :func:`bivariate_mult` on all families."""
    validate(spec)
    if k < 1:
        raise InvalidHighestWeight(f"need k >= 1 for l = 1, got k = {k}")
    mu = check_weight(spec, mu)
    n = spec.rank
    fam = spec.family
    if fam == "A":
        rep = normalize_a_to_sum(mu, k + 1)
        if rep is None or max(rep) > k:
            return 0
        zeros = sum(1 for b in rep if b == 0)
        return n - zeros
    norm, (ell0,) = _stats_bcd(spec, mu, 1)
    r2 = k + 1 - norm
    if r2 < 0:
        return 0
    if fam == "B":
        d = n - 1
        return (
            binom((r2 - 1) // 2 + d, d)
            + (n + ell0) * binom((r2 - 2) // 2 + d, d)
            + (n - ell0) * binom((r2 - 2) // 2 + 1 + d, d)
            - binom(r2 // 2 + d, d)
            - binom((r2 - 2) // 2 + d, d)
        )
    if r2 % 2:
        return 0
    r = r2 // 2
    d = n - 1 if fam == "C" else n - 2
    return (n + ell0 - 1) * binom(r - 1 + d, d) + (n - ell0 - 1) * binom(r + d, d)


def l2_mult_d(n: int, k: int, mu) -> int:
    """Closed form for family D with l = 2 (three binomials in r, l_0, l_1)."""
    spec = algebra("D", n)
    if k < 2:
        raise InvalidHighestWeight(f"need k >= 2 for l = 2, got k = {k}")
    mu = check_weight(spec, mu)
    r2 = k + 2 - one_norm(mu)
    if r2 < 0 or r2 % 2:
        return 0
    r = r2 // 2
    _, (ell0, ell1) = weight_stats(spec, mu, 2)
    open_pairs = binom(n - ell0, 2)
    return (
        binom(r + n - 4, n - 2) * (2 * ell0 * (n - 1) + open_pairs)
        + binom(r + n - 3, n - 2)
        * (2 * ell0 * (n - ell0) + ell1 - n + 2 * open_pairs)
        + binom(r + n - 2, n - 2) * (open_pairs - ell1)
    )


def l2_mult_a(n: int, k: int, mu) -> int:
    """Closed form for family A with l = 2: C(n+1-l_0, 2) - l_1."""
    spec = algebra("A", n)
    if k < 2:
        raise InvalidHighestWeight(f"need k >= 2 for l = 2, got k = {k}")
    mu = check_weight(spec, mu)
    rep = normalize_a_to_sum(mu, k + 2)
    if rep is None or max(rep) > k:
        return 0
    ell0 = sum(1 for b in rep if b == 0)
    ell1 = sum(1 for b in rep if b == 1)
    return binom(n + 1 - ell0, 2) - ell1

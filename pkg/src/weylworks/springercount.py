"""Point counts of nilpotent flag fibres over finite fields.

Counts chains 0 = F_0 <= F_1 <= ... <= F_n = F_q^N with prescribed
dimension jumps mu, where a fixed nilpotent X of Jordan type nu maps
each F_i into F_{i-1}.  The fast route peels off F_1 inside ker X and
recurses on the quotient; the number of choices of F_1 inducing a given
quotient type depends only on how F_1 meets the socle filtration
S_j = (ker X) meet (im X^{j-1}), which gives a closed product of q-binomials.
A literal echelon-form enumeration is kept alongside as an independent
cross-check.

The count is a polynomial in q with nonnegative integer coefficients
(the chains stratify into affine cells), so evaluations at a handful of
primes determine it exactly.  The number of top-dimensional components
of the fibre is the leading coefficient.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from .characters import DEFAULT_SIZE_GUARD, kostka
from .errors import InvariantViolation, ResourceLimitError, WeylworksError
from .weights import Partition, as_partition, conjugate


class NonPolynomialCountError(WeylworksError):
    """Raised when prime-by-prime counts refuse to fit one polynomial."""


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    f = 2
    while f * f <= m:
        if m % f == 0:
            return False
        f += 1
    return True


def first_primes(count: int) -> list[int]:
    out: list[int] = []
    m = 2
    while len(out) < count:
        if is_prime(m):
            out.append(m)
        m += 1
    return out


def gaussian_binomial(a: int, b: int, q: int) -> int:
    """The q-binomial coefficient [a choose b] evaluated at an integer q >= 2."""
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if b < 0 or b > a:
        return 0
    b = min(b, a - b)
    num = 1
    den = 1
    for i in range(b):
        num *= q ** (a - i) - 1
        den *= q ** (i + 1) - 1
    quot, rem = divmod(num, den)
    if rem:
        raise InvariantViolation("q-binomial product did not divide exactly")
    return quot


def _transition_counts(nu: Partition, k: int, q: int) -> dict[Partition, int]:
    """Subspaces W of ker X with dim W = k, grouped by quotient type.

    X is nilpotent of Jordan type nu on V.  Every such W meets the socle
    filtration S_j = (ker X) meet (im X^{j-1}) (dim S_j = conjugate(nu)[j-1])
    in a profile w_j = dim(W meet S_j); the number of W with a fixed
    profile is a product of q-binomials times a power of q, and the
    Jordan type on V/W has conjugate entries d_j - w_j + w_{j+1}.
    Returns {quotient type: number of W over F_q}.
    """
    if k < 0:
        return {}
    dt = conjugate(nu)
    m = len(dt)
    if m == 0:
        return {(): 1} if k == 0 else {}
    if k > dt[0]:
        return {}
    d = list(dt) + [0]
    results: dict[Partition, int] = {}

    def rec(j: int, w_j: int, count: int, cols: list[int]) -> None:
        if j > m:
            quotient = conjugate(as_partition(cols))
            results[quotient] = results.get(quotient, 0) + count
            return
        dj, dj1 = d[j - 1], d[j]
        for w_next in range(min(w_j, dj1), -1, -1):
            step = w_j - w_next
            if step > dj - dj1:
                continue
            factor = gaussian_binomial(dj - dj1, step, q) * q ** (step * (dj1 - w_next))
            cols.append(dj - w_j + w_next)
            rec(j + 1, w_next, count * factor, cols)
            cols.pop()

    rec(1, k, 1, [])
    return results


def _checked_steps(nu: Partition, mu, n: int | None) -> tuple[int, ...]:
    steps = tuple(int(x) for x in mu)
    if any(x < 0 for x in steps):
        raise ValueError(f"dimension jumps must be nonnegative, got {steps}")
    if n is not None:
        if len(steps) > n:
            raise ValueError(f"mu has {len(steps)} parts, more than n={n}")
        steps = steps + (0,) * (n - len(steps))
    return steps


def count_fiber_points(q: int, nu, mu, n: int | None = None) -> int:
    """Number of chains 0 = F_0 <= ... <= F_n = F_q^N over F_q.

    The chains have dim(F_i / F_{i-1}) = mu_i and X F_i <= F_{i-1} for a
    nilpotent X of Jordan type nu with N = |nu|.  When n is given, mu is
    padded with zero jumps to n steps.  If the jumps do not sum to |nu|
    no chain can close up, and the count is 0.
    """
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    nu = as_partition(nu)
    steps = _checked_steps(nu, mu, n)
    memo: dict[tuple[Partition, int], int] = {}

    def f(shape: Partition, i: int) -> int:
        if i == len(steps):
            return 1 if not shape else 0
        key = (shape, i)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = 0
        for quotient, ways in _transition_counts(shape, steps[i], q).items():
            total += ways * f(quotient, i + 1)
        memo[key] = total
        return total

    return f(nu, 0)


def jordan_matrix(nu) -> list[list[int]]:
    """Nilpotent matrix in Jordan form with block sizes nu (0/1 entries)."""
    nu = as_partition(nu)
    size = sum(nu)
    mat = [[0] * size for _ in range(size)]
    offset = 0
    for part in nu:
        for t in range(1, part):
            mat[offset + t - 1][offset + t] = 1
        offset += part
    return mat


@dataclass(frozen=True)
class NilpotentOperator:
    """A Jordan-form nilpotent together with its type, over a prime field."""

    N: int
    nu: Partition
    matrix: tuple[tuple[int, ...], ...]
    q: int

    def rank_sequence(self) -> tuple[int, ...]:
        """Ranks of matrix^0, matrix^1, ... down to the first zero power."""
        ranks = [self.N]
        power = [list(row) for row in self.matrix]
        mat = [list(row) for row in self.matrix]
        while True:
            _, pivots = _rref_modq(power, self.q)
            ranks.append(len(pivots))
            if not pivots:
                return tuple(ranks)
            power = [
                [sum(row[t] * mat[t][c] for t in range(self.N)) % self.q
                 for c in range(self.N)]
                for row in power
            ]


def jordan_nilpotent(nu, q: int) -> NilpotentOperator:
    """The Jordan-form nilpotent of type nu as an operator over F_q."""
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    nu = as_partition(nu)
    mat = jordan_matrix(nu)
    return NilpotentOperator(
        N=sum(nu), nu=nu, matrix=tuple(tuple(r) for r in mat), q=q
    )


def _mat_vec_modq(mat: list[list[int]], vec: list[int], q: int) -> list[int]:
    return [sum(row[c] * vec[c] for c in range(len(vec))) % q for row in mat]


def _rref_modq(rows: list[list[int]], q: int) -> tuple[list[list[int]], list[int]]:
    """Reduced echelon form over F_q, rows sorted by pivot column."""
    work = [[x % q for x in r] for r in rows]
    out: list[list[int]] = []
    pivots: list[int] = []
    for row in work:
        for r, p in zip(out, pivots):
            c = row[p]
            if c:
                row = [(a - c * b) % q for a, b in zip(row, r)]
        pivot = next((c for c, x in enumerate(row) if x), None)
        if pivot is None:
            continue
        inv = pow(row[pivot], -1, q)
        row = [(inv * x) % q for x in row]
        for r in out:
            c = r[pivot]
            if c:
                r[:] = [(a - c * b) % q for a, b in zip(r, row)]
        out.append(row)
        pivots.append(pivot)
    order = sorted(range(len(out)), key=lambda i: pivots[i])
    return [out[i] for i in order], sorted(pivots)


def _reduce_modq(vec: list[int], rows: list[list[int]], pivots: list[int], q: int) -> list[int]:
    """Residual of vec against an RREF basis, all mod q."""
    vec = [x % q for x in vec]
    for r, p in zip(rows, pivots):
        c = vec[p]
        if c:
            vec = [(a - c * b) % q for a, b in zip(vec, r)]
    return vec


def _subspaces_modq(dim: int, k: int, q: int, tick) -> Iterator[list[list[int]]]:
    """All k-dimensional subspaces of F_q^dim as reduced echelon bases."""
    for pivots in itertools.combinations(range(dim), k):
        free = [
            (r, c)
            for r, p in enumerate(pivots)
            for c in range(p + 1, dim)
            if c not in pivots
        ]
        for values in itertools.product(range(q), repeat=len(free)):
            tick()
            rows = [[0] * dim for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), v in zip(free, values):
                rows[r][c] = v
            yield rows


def count_fiber_points_bruteforce(q: int, nu, mu, n: int | None = None,
                                  *, budget: int = 10**8) -> int:
    """Count the same chains as count_fiber_points by direct enumeration.

    Walks every echelon form at every step and tests X F_i <= F_{i-1}
    generator by generator.  Exponentially slower than the recursion and
    kept purely as an independent check for small inputs; budget bounds
    the number of echelon forms generated before ResourceLimitError.
    """
    if not is_prime(q):
        raise ValueError(f"q must be prime for direct enumeration, got {q}")
    nu = as_partition(nu)
    steps = _checked_steps(nu, mu, n)
    if sum(steps) != sum(nu):
        return 0
    size = sum(nu)
    estimate = 0
    level = 1
    remaining = size
    for k in steps:
        level *= gaussian_binomial(remaining, k, q)
        estimate += level
        remaining -= k
    if estimate > budget:
        raise ResourceLimitError(
            f"estimated {estimate} echelon forms exceeds the budget of {budget}"
        )
    xmat = jordan_matrix(nu)
    spent = [0]

    def tick() -> None:
        spent[0] += 1
        if spent[0] > budget:
            raise ResourceLimitError(
                f"echelon enumeration exceeded the budget of {budget} forms"
            )

    def extend(rows: list[list[int]], pivots: list[int], i: int) -> int:
        if i == len(steps):
            return 1
        complement = [c for c in range(size) if c not in pivots]
        total = 0
        for small in _subspaces_modq(len(complement), steps[i], q, tick):
            lifted = []
            for srow in small:
                big = [0] * size
                for val, c in zip(srow, complement):
                    big[c] = val
                lifted.append(big)
            if any(
                any(_reduce_modq(_mat_vec_modq(xmat, v, q), rows, pivots, q))
                for v in lifted
            ):
                continue
            new_rows, new_pivots = _rref_modq([list(r) for r in rows] + lifted, q)
            total += extend(new_rows, new_pivots, i + 1)
        return total

    return extend([], [], 0)


def _poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(list(coeffs)):
        acc = acc * x + c
    return acc


def interpolate(points, degree_bound: int) -> tuple[Fraction, ...]:
    """Exact polynomial through the points, as ascending coefficients.

    Fits the unique polynomial of degree <= degree_bound through the
    first degree_bound + 1 points (after sorting by abscissa) and then
    demands that every remaining point lie on it exactly, raising
    NonPolynomialCountError otherwise.  At least degree_bound + 2 points
    are required so that there is always something left to check.
    Trailing zero coefficients are stripped, so the constant zero
    polynomial comes back as (0,).
    """
    if degree_bound < 0:
        raise ValueError("degree_bound must be nonnegative")
    pairs = points.items() if isinstance(points, dict) else points
    pts = sorted((int(x), int(y)) for x, y in pairs)
    if len({x for x, _ in pts}) != len(pts):
        raise ValueError("duplicate abscissae")
    if len(pts) < degree_bound + 2:
        raise ValueError(
            f"need at least {degree_bound + 2} points for degree {degree_bound}, "
            f"got {len(pts)}"
        )
    fit = pts[: degree_bound + 1]
    coeffs = [Fraction(0)] * (degree_bound + 1)
    for i, (xi, yi) in enumerate(fit):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(fit):
            if j == i:
                continue
            shifted = [Fraction(0)] + basis
            scaled = [xj * c for c in basis] + [Fraction(0)]
            basis = [a - b for a, b in zip(shifted, scaled)]
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for kk, c in enumerate(basis):
            coeffs[kk] += scale * c
    for x, y in pts:
        predicted = _poly_eval(coeffs, x)
        if predicted != y:
            raise NonPolynomialCountError(
                f"count at q={x} is {y} but the degree-{degree_bound} fit "
                f"predicts {predicted}"
            )
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class PointCountTable:
    """Prime evaluations of a chain count plus the interpolated polynomial.

    coefficients are ascending powers of q; evaluations hold every
    (prime, count) pair that was computed along the way.
    """

    nu: Partition
    mu: tuple[int, ...]
    evaluations: tuple[tuple[int, int], ...]
    coefficients: tuple[int, ...]

    @property
    def lam(self) -> Partition:
        """Conjugate of the Jordan type; labels the matching irreducible."""
        return conjugate(self.nu)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1]


def point_count_table(nu, mu, n: int | None = None, *, primes=None) -> PointCountTable:
    """Count chains at several primes and recover the exact polynomial.

    With the default prime supply the degree is discovered adaptively: a
    candidate bound b is fitted on b + 1 primes and checked on two more,
    and an accepted fit is then certified against enough further primes
    that no other polynomial of degree up to the cell-dimension cap (sum
    of products of distinct jumps) could match.  When an explicit prime
    list is given it is taken as the authority instead: the smallest
    degree whose fit reproduces every supplied count wins.  Coefficients
    must come out as nonnegative integers; anything else raises
    InvariantViolation.
    """
    nu = as_partition(nu)
    steps = _checked_steps(nu, mu, n)
    cap = sum(a * b for a, b in itertools.combinations(steps, 2))
    values: dict[int, int] = {}

    def value(p: int) -> int:
        if p not in values:
            values[p] = count_fiber_points(p, nu, steps)
        return values[p]

    def finish(coeffs) -> PointCountTable:
        ints = []
        for c in coeffs:
            if c.denominator != 1 or c < 0:
                raise InvariantViolation(
                    f"count polynomial for nu={nu}, mu={steps} has coefficient "
                    f"{c}; expected a nonnegative integer"
                )
            ints.append(int(c))
        return PointCountTable(
            nu=nu,
            mu=steps,
            evaluations=tuple(sorted(values.items())),
            coefficients=tuple(ints),
        )

    last_error: NonPolynomialCountError | None = None
    if primes is not None:
        plist = sorted(int(p) for p in primes)
        if len(set(plist)) != len(plist) or any(not is_prime(p) for p in plist):
            raise ValueError("primes must be distinct primes")
        if len(plist) < 2:
            raise ValueError("need at least two primes")
        sample = [(p, value(p)) for p in plist]
        for bound in range(min(cap, len(plist) - 2) + 1):
            try:
                return finish(interpolate(sample, bound))
            except NonPolynomialCountError as err:
                last_error = err
        raise NonPolynomialCountError(
            f"no polynomial of degree <= {min(cap, len(plist) - 2)} fits the "
            f"supplied counts for nu={nu}, mu={steps}"
        ) from last_error

    plist = first_primes(cap + 3)
    for bound in range(cap + 1):
        sample = [(p, value(p)) for p in plist[: bound + 3]]
        try:
            coeffs = interpolate(sample, bound)
        except NonPolynomialCountError as err:
            last_error = err
            continue
        extra = [(p, value(p)) for p in plist[bound + 3 : cap + 1]]
        if any(_poly_eval(coeffs, p) != v for p, v in extra):
            continue
        return finish(coeffs)
    raise NonPolynomialCountError(
        f"no polynomial of degree <= {cap} fits the counts for nu={nu}, mu={steps}"
    ) from last_error


def component_count(nu, mu, n: int | None = None, *, primes=None,
                    size_guard: int | None = DEFAULT_SIZE_GUARD) -> int:
    """Number of top-dimensional components of the chain variety.

    Read off as the leading coefficient of the point-count polynomial
    and cross-checked against kostka(conjugate(nu), mu), which counts
    the same components combinatorially; a mismatch raises
    InvariantViolation.
    """
    table = point_count_table(nu, mu, n, primes=primes)
    lead = table.leading_coefficient
    expected = kostka(conjugate(table.nu), table.mu, size_guard=size_guard)
    if lead != expected:
        raise InvariantViolation(
            f"leading coefficient {lead} disagrees with the Kostka count "
            f"{expected} for nu={table.nu}, mu={table.mu}"
        )
    return lead

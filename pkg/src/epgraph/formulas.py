"""Closed-form invariants of enhanced power graphs as pure integer functions.

Each function here evaluates a theorem-backed expression from group
parameters alone, never from a constructed graph, so the verification
harness can diff it against the exact graph oracles.  All arithmetic is
exact: rational intermediates must combine to integers or we raise
instead of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FormulaInternalError, InvalidParameterError
from .groups import FiniteGroup, cyclic_subgroups, involution_count
from .numutil import prime_power, split_3adic
from .report import InvariantReport, MatchingEstimate


# ---------------------------------------------------------------------------
# shapes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PGroupShape:
    """Abelian p-group descriptor: parts (alpha_i, m_i) with alphas decreasing.

    Describes Z_{p^a1}^{m1} x ... x Z_{p^as}^{ms}. Derived quantities:
    n_j = p^(sum_{i<=j} m_i*alpha_i) and r_j = sum_{i<=j} m_i, with
    n_0 = 1 and r_0 = 0.
    """

    p: int
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if prime_power(self.p) != (self.p, 1):
            raise InvalidParameterError(f"{self.p} is not prime")
        alphas = [a for a, _ in self.parts]
        if not alphas or alphas != sorted(alphas, reverse=True) or len(set(alphas)) != len(alphas):
            raise InvalidParameterError("exponents must be strictly decreasing")
        if any(a < 1 or m < 1 for a, m in self.parts):
            raise InvalidParameterError("exponents and multiplicities must be >= 1")

    @property
    def s(self) -> int:
        return len(self.parts)

    def r(self, j: int) -> int:
        return sum(m for _, m in self.parts[:j])

    def n(self, j: int) -> int:
        return self.p ** sum(a * m for a, m in self.parts[:j])

    @property
    def rank(self) -> int:
        return self.r(self.s)

    @property
    def order(self) -> int:
        return self.n(self.s)

    @property
    def exponent_value(self) -> int:
        return self.p ** self.parts[0][0]

    @property
    def is_cyclic(self) -> bool:
        return self.rank == 1

    def prime_power_parts(self) -> tuple[int, ...]:
        out = []
        for a, m in self.parts:
            out.extend([self.p ** a] * m)
        return tuple(out)

    @classmethod
    def from_prime_powers(cls, values) -> "PGroupShape":
        """Build from a list of p^a parts sharing one prime."""
        decomposed = []
        for v in values:
            pp = prime_power(v)
            if pp is None:
                raise InvalidParameterError(f"part {v} is not a prime power > 1")
            decomposed.append(pp)
        primes = {p for p, _ in decomposed}
        if len(primes) != 1:
            raise InvalidParameterError("parts must share a single prime")
        p = primes.pop()
        mult: dict[int, int] = {}
        for _, a in decomposed:
            mult[a] = mult.get(a, 0) + 1
        parts = tuple(sorted(mult.items(), reverse=True))
        return cls(p=p, parts=parts)


def shapes_from_parts(values) -> tuple[PGroupShape, ...]:
    """Split a list of prime powers into per-prime shapes (any abelian group)."""
    by_prime: dict[int, list[int]] = {}
    for v in values:
        pp = prime_power(v)
        if pp is None:
            raise InvalidParameterError(f"part {v} is not a prime power > 1")
        by_prime.setdefault(pp[0], []).append(v)
    return tuple(PGroupShape.from_prime_powers(vs) for _, vs in sorted(by_prime.items()))


@dataclass(frozen=True)
class U6nShape:
    """Parameter of the order-6n family, split as n = 3^k * t with 3 not | t."""

    n: int
    k: int
    t: int

    def __post_init__(self):
        if self.n < 1 or self.t < 1 or self.t % 3 == 0 or 3 ** self.k * self.t != self.n:
            raise InvalidParameterError("need n = 3^k * t with t >= 1 and 3 not dividing t")

    @classmethod
    def from_n(cls, n: int) -> "U6nShape":
        if n < 1:
            raise InvalidParameterError("u6n shape needs n >= 1")
        k, t = split_3adic(n)
        return cls(n=n, k=k, t=t)


# ---------------------------------------------------------------------------
# general-group formulas (fed by cyclic-subgroup enumeration)
# ---------------------------------------------------------------------------

def mindeg_general(g: FiniteGroup) -> int:
    """m - 1 where m is the order of a smallest maximal cyclic subgroup."""
    return min(e.order for e in cyclic_subgroups(g).maximal_entries) - 1


def indep_maximal_count(g: FiniteGroup) -> int:
    """Independence number of the enhanced power graph: count of maximal
    cyclic subgroups."""
    return cyclic_subgroups(g).maximal_count


def edge_connectivity_formula(g: FiniteGroup) -> int:
    """Edge connectivity equals minimum degree (diameter is at most 2)."""
    return mindeg_general(g)


def matching_general(g: FiniteGroup) -> MatchingEstimate:
    """Odd order: exactly (|G|-1)/2.  Even order: inclusive bounds
    ((|G|-(t-1))/2, |G|/2) with t the involution count."""
    n = g.order
    if n % 2 == 1:
        v = (n - 1) // 2
        return MatchingEstimate(v, v)
    t = involution_count(g)
    return MatchingEstimate((n - (t - 1)) // 2, n // 2)


def matching_pgroup(g: FiniteGroup) -> int:
    """Exact matching number for groups of prime-power order."""
    n = g.order
    if n == 1:
        return 0
    pp = prime_power(n)
    if pp is None:
        raise InvalidParameterError(f"order {n} is not a prime power")
    p, _ = pp
    if p > 2:
        return (n - 1) // 2
    t = involution_count(g)
    return (n - (t - 1)) // 2


def covers_from(alpha: int, alpha_prime: int, n: int) -> tuple[int, int]:
    """Vertex/edge cover numbers from independence and matching numbers.

    Requires a graph without isolated vertices for the edge-cover half;
    alpha_prime = 0 with n >= 1 means isolated vertices exist, which has
    no finite edge cover.
    """
    if n < 1:
        raise InvalidParameterError("need n >= 1")
    if alpha > n:
        raise InvalidParameterError(f"independence number {alpha} exceeds {n}")
    if alpha_prime == 0 and n >= 1:
        raise InvalidParameterError("edge cover undefined when isolated vertices exist")
    return n - alpha, n - alpha_prime


# ---------------------------------------------------------------------------
# abelian p-groups
# ---------------------------------------------------------------------------

def _mu_k(shape: PGroupShape, k: int) -> Fraction:
    if k <= 1:
        return Fraction(0)
    p = shape.p
    total = Fraction(0)
    for j in range(1, k):
        alpha_j = shape.parts[j - 1][0]
        alpha_j1 = shape.parts[j][0]
        inner = sum(p ** ((shape.r(j) - 1) * beta) for beta in range(alpha_j1, alpha_j))
        total += Fraction(p ** shape.r(j) - 1, shape.n(j)) * inner
    return total


def indep_abelian_pgroup(shape: PGroupShape) -> int:
    """Number of maximal cyclic subgroups of an abelian p-group, from the
    shape alone.

    Sum over t = 1..r of (n / p^(t-1)) * (p^((r_k - 1) * alpha_k) / n_k + mu_k)
    where k is the block with r_{k-1} < t <= r_k and
    mu_k = sum_{j<k} ((p^{r_j} - 1)/n_j) * sum_{beta=alpha_{j+1}}^{alpha_j - 1}
    p^{(r_j - 1) beta} (zero for k = 1).  Exact rational arithmetic; an
    inexact total raises FormulaInternalError.
    """
    p = shape.p
    n = shape.order
    r = shape.rank
    total = Fraction(0)
    for t in range(1, r + 1):
        k = next(j for j in range(1, shape.s + 1) if shape.r(j - 1) < t <= shape.r(j))
        alpha_k = shape.parts[k - 1][0]
        brace = Fraction(p ** ((shape.r(k) - 1) * alpha_k), shape.n(k)) + _mu_k(shape, k)
        total += Fraction(n, p ** (t - 1)) * brace
    if total.denominator != 1:
        raise FormulaInternalError(f"independence total {total} is not an integer")
    return int(total)


def indep_abelian(shapes) -> int:
    """Independence number of any finite abelian group: product of the
    per-prime maximal-cyclic counts."""
    shapes = tuple(shapes)
    primes = [s.p for s in shapes]
    if len(set(primes)) != len(primes):
        raise InvalidParameterError("shapes must have pairwise distinct primes")
    out = 1
    for s in shapes:
        out *= indep_abelian_pgroup(s)
    return out


def sdim_abelian_pgroup(shape: PGroupShape) -> int:
    """Strong metric dimension for an abelian p-group: |G| - 1 when cyclic,
    else |G| - (alpha + 1) with p^alpha the exponent."""
    n = shape.order
    if shape.is_cyclic:
        return n - 1
    return n - (shape.parts[0][0] + 1)


def matching_abelian_pgroup(shape: PGroupShape) -> int:
    """Exact matching number from the shape: involutions of an abelian
    2-group number p^rank - 1."""
    n = shape.order
    if shape.p > 2:
        return (n - 1) // 2
    t = 2 ** shape.rank - 1
    return (n - (t - 1)) // 2


def mindeg_abelian(shapes) -> int:
    """Minimum degree for an abelian group: the smallest maximal cyclic
    subgroup is the product of the per-prime smallest cyclic factors."""
    shapes = tuple(shapes)
    primes = [s.p for s in shapes]
    if len(set(primes)) != len(primes):
        raise InvalidParameterError("shapes must have pairwise distinct primes")
    m = 1
    for s in shapes:
        m *= s.p ** s.parts[-1][0]
    return m - 1


# ---------------------------------------------------------------------------
# family reports
# ---------------------------------------------------------------------------

def u6n_invariants(shape: U6nShape) -> InvariantReport:
    """All closed-form invariants of the order-6n family."""
    n, k, t = shape.n, shape.k, shape.t
    size = 6 * n
    delta = (2 * t - 1) if k == 0 else (3 * t - 1)
    alpha = 2 * k + 4
    alpha_prime = 2 if n == 1 else 3 * n
    beta, beta_prime = covers_from(alpha, alpha_prime, size)
    return InvariantReport(
        label=f"U_{size}", source="formula", size=size,
        min_degree=delta,
        independence_number=alpha,
        matching_number=alpha_prime,
        vertex_cover_number=beta,
        edge_cover_number=beta_prime,
        edge_connectivity=delta,
        strong_metric_dimension=6 * n - k - 2,
    )


def d2n_invariants(n: int) -> InvariantReport:
    """All closed-form invariants of the dihedral family (order 2n)."""
    if n < 2:
        raise InvalidParameterError("dihedral invariants need n >= 2")
    size = 2 * n
    alpha = n + 1
    alpha_prime = (n + 1) // 2
    beta, beta_prime = covers_from(alpha, alpha_prime, size)
    return InvariantReport(
        label=f"D_{size}", source="formula", size=size,
        min_degree=1,
        independence_number=alpha,
        matching_number=alpha_prime,
        vertex_cover_number=beta,
        edge_cover_number=beta_prime,
        edge_connectivity=1,
        strong_metric_dimension=2 * (n - 1),
    )


def sd8n_invariants(n: int) -> InvariantReport:
    """All closed-form invariants of the semidihedral family (order 8n)."""
    if n < 1:
        raise InvalidParameterError("semidihedral invariants need n >= 1")
    size = 8 * n
    alpha = 3 * n + 1
    alpha_prime = 3 * n
    beta, beta_prime = covers_from(alpha, alpha_prime, size)
    return InvariantReport(
        label=f"SD_{size}", source="formula", size=size,
        min_degree=1,
        independence_number=alpha,
        matching_number=alpha_prime,
        vertex_cover_number=beta,
        edge_cover_number=beta_prime,
        edge_connectivity=1,
        strong_metric_dimension=8 * n - 3,
    )


def cyclic_invariants(n: int) -> InvariantReport:
    """Closed forms for cyclic groups: the enhanced power graph is complete."""
    if n < 1:
        raise InvalidParameterError("cyclic invariants need n >= 1")
    alpha_prime = n // 2
    if n >= 2:
        _, beta_prime = covers_from(1, alpha_prime, n)
    else:
        beta_prime = None
    return InvariantReport(
        label=f"Z_{n}", source="formula", size=n,
        min_degree=n - 1,
        independence_number=1,
        matching_number=alpha_prime,
        vertex_cover_number=n - 1,
        edge_cover_number=beta_prime,
        edge_connectivity=n - 1 if n >= 2 else None,
        strong_metric_dimension=n - 1,
    )


def abelian_invariants(parts) -> InvariantReport:
    """Closed forms for an abelian group given as prime-power parts.

    Single-prime groups get the full set; multi-prime groups get whatever
    is determined by the product rules (strong metric dimension is only
    known in the single-prime case).
    """
    shapes = shapes_from_parts(parts)
    size = 1
    for s in shapes:
        size *= s.order
    alpha = indep_abelian(shapes)
    delta = mindeg_abelian(shapes)
    if len(shapes) == 1:
        shape = shapes[0]
        matching: int | MatchingEstimate = matching_abelian_pgroup(shape)
        sdim = sdim_abelian_pgroup(shape)
    else:
        sdim = None
        if size % 2 == 1:
            matching = MatchingEstimate((size - 1) // 2, (size - 1) // 2)
        else:
            two_shape = next(s for s in shapes if s.p == 2)
            t = 2 ** two_shape.rank - 1
            matching = MatchingEstimate((size - (t - 1)) // 2, size // 2)
        if isinstance(matching, MatchingEstimate) and matching.exact:
            matching = matching.lower
    beta = size - alpha
    if size >= 2 and (not isinstance(matching, MatchingEstimate)):
        beta_prime = size - matching
    else:
        beta_prime = None
    label = "x".join(f"Z_{p}" for s in shapes for p in s.prime_power_parts())
    return InvariantReport(
        label=label, source="formula", size=size,
        min_degree=delta,
        independence_number=alpha,
        matching_number=matching,
        vertex_cover_number=beta,
        edge_cover_number=beta_prime,
        edge_connectivity=delta if size >= 2 else None,
        strong_metric_dimension=sdim,
    )


def genq_invariants(m: int) -> InvariantReport:
    """Closed forms for generalized quaternion groups: the unique involution
    forces matching = edge cover = |G|/2; the rest has no closed form here."""
    if m < 2:
        raise InvalidParameterError("generalized quaternion invariants need m >= 2")
    size = 4 * m
    return InvariantReport(
        label=f"Q_{size}", source="formula", size=size,
        matching_number=size // 2,
        edge_cover_number=size // 2,
    )

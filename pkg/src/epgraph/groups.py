"""Finite groups as dense Cayley tables, plus the family constructors.

Elements are indices 0..order-1 with index 0 the identity.  Every
constructor documents its canonical element enumeration so that fixtures
and golden files stay stable across runs.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import IO, Iterable

import numpy as np

from .errors import InvalidParameterError, SizeLimitError, SpecParseError
from .numutil import is_prime, lcm_all, prime_power, split_3adic

DEFAULT_SIZE_CAP = 4096

_FAMILIES = ("cyclic", "abelian", "dihedral", "semidihedral", "u6n", "gen_quaternion", "product")

# Full associativity is O(n^3); above this order we sample random triples.
_FULL_ASSOC_LIMIT = 64
_ASSOC_SAMPLE_FACTOR = 10


def _check_cap(order: int, size_cap: int | None) -> None:
    cap = DEFAULT_SIZE_CAP if size_cap is None else size_cap
    if order > cap:
        raise SizeLimitError(f"group order {order} exceeds size cap {cap}")


@dataclass(frozen=True)
class FiniteGroup:
    """Immutable Cayley-table group over element indices 0..order-1."""

    order: int
    table: np.ndarray
    inverses: tuple[int, ...]
    elem_orders: tuple[int, ...]
    label: str
    elem_names: tuple[str, ...]
    meta: dict = field(default_factory=dict, compare=False)

    identity: int = 0

    def __post_init__(self):
        _validate_table(self.order, self.table)
        if len(self.inverses) != self.order or len(self.elem_orders) != self.order:
            raise InvalidParameterError("inverse/order arrays must match group order")
        for x in range(self.order):
            if self.elem_orders[x] < 1 or self.order % self.elem_orders[x] != 0:
                raise InvalidParameterError(f"element order of {x} does not divide {self.order}")

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverses[a], -k)
        result = 0
        base = a
        while k:
            if k & 1:
                result = int(self.table[result, base])
            base = int(self.table[base, base])
            k >>= 1
        return result

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def cyclic_members(self, x: int) -> frozenset[int]:
        """Members of the cyclic subgroup generated by x (cached)."""
        cache = self.meta.setdefault("_cyclic_cache", {})
        got = cache.get(x)
        if got is None:
            members = [0]
            cur = x
            while cur != 0:
                members.append(cur)
                cur = int(self.table[cur, x])
            got = frozenset(members)
            cache[x] = got
        return got


def _validate_table(order: int, table: np.ndarray) -> None:
    if order < 1:
        raise InvalidParameterError("group order must be at least 1")
    if table.shape != (order, order):
        raise InvalidParameterError("Cayley table has the wrong shape")
    rng = np.arange(order)
    if not np.array_equal(table[0], rng) or not np.array_equal(table[:, 0], rng):
        raise InvalidParameterError("index 0 must act as a two-sided identity")
    if not np.array_equal(np.sort(table, axis=1), np.tile(rng, (order, 1))):
        raise InvalidParameterError("Cayley table rows are not permutations")
    if not np.array_equal(np.sort(table, axis=0), np.tile(rng.reshape(-1, 1), (1, order))):
        raise InvalidParameterError("Cayley table columns are not permutations")
    if order <= _FULL_ASSOC_LIMIT:
        # left[i,j,k] = (ij)k, right[i,j,k] = i(jk)
        ok = np.array_equal(table[table, :], table[:, table])
    else:
        rng_state = np.random.default_rng(0xC0FFEE ^ order)
        m = _ASSOC_SAMPLE_FACTOR * order * order
        i = rng_state.integers(0, order, m)
        j = rng_state.integers(0, order, m)
        k = rng_state.integers(0, order, m)
        ok = np.array_equal(table[table[i, j], k], table[i, table[j, k]])
    if not ok:
        raise InvalidParameterError("Cayley table is not associative")


def _finish_group(table: np.ndarray, label: str, names: list[str], meta: dict | None = None,
                  size_cap: int | None = None) -> FiniteGroup:
    order = table.shape[0]
    _check_cap(order, size_cap)
    table = np.ascontiguousarray(table, dtype=np.int64)
    inverses = tuple(int(v) for v in np.argmax(table == 0, axis=1))
    elem_orders = _element_orders(table)
    return FiniteGroup(order=order, table=table, inverses=inverses,
                       elem_orders=elem_orders, label=label,
                       elem_names=tuple(names), meta=dict(meta or {}))


def _element_orders(table: np.ndarray) -> tuple[int, ...]:
    n = table.shape[0]
    orders = np.zeros(n, dtype=np.int64)
    orders[0] = 1
    cur = np.arange(n)
    rng = np.arange(n)
    k = 1
    while (orders == 0).any():
        hit = (cur == 0) & (orders == 0)
        orders[hit] = k
        if (orders != 0).all():
            break
        cur = table[cur, rng]
        k += 1
        if k > n:
            raise InvalidParameterError("power sequence never reaches the identity")
    return tuple(int(v) for v in orders)


def _power_name(sym: str, i: int) -> str:
    if i == 0:
        return ""
    if i == 1:
        return sym
    return f"{sym}^{i}"


def _two_gen_name(i: int, j: int, asym: str = "a", bsym: str = "b") -> str:
    pa = _power_name(asym, i)
    pb = _power_name(bsym, j)
    if not pa and not pb:
        return "e"
    if not pa:
        return pb
    if not pb:
        return pa
    return f"{pa}*{pb}"


# ---------------------------------------------------------------------------
# family constructors
# ---------------------------------------------------------------------------

def make_cyclic(n: int, size_cap: int | None = None) -> FiniteGroup:
    """Integers modulo n; element i is the residue i."""
    if n < 1:
        raise InvalidParameterError("cyclic group needs n >= 1")
    _check_cap(n, size_cap)
    rng = np.arange(n)
    table = (rng[:, None] + rng[None, :]) % n
    names = [str(i) for i in range(n)]
    return _finish_group(table, f"Z_{n}", names, {"n": n}, size_cap)


def make_abelian(parts: Iterable[int], size_cap: int | None = None) -> FiniteGroup:
    """Direct product of cyclic groups of prime-power order.

    Element index encodes the coordinate tuple in mixed radix with the
    first part most significant.
    """
    parts = tuple(int(p) for p in parts)
    if not parts:
        raise InvalidParameterError("abelian group needs at least one part")
    for p in parts:
        if prime_power(p) is None:
            raise InvalidParameterError(f"part {p} is not a prime power > 1")
    order = math.prod(parts)
    _check_cap(order, size_cap)
    idx = np.arange(order)
    coords = np.unravel_index(idx, parts)
    table = np.zeros((order, order), dtype=np.int64)
    stride = 1
    for dim in range(len(parts) - 1, -1, -1):
        c = coords[dim]
        table += ((c[:, None] + c[None, :]) % parts[dim]) * stride
        stride *= parts[dim]
    names = ["(" + ",".join(str(c[i]) for c in coords) + ")" for i in idx]
    label = "x".join(f"Z_{p}" for p in parts)
    return _finish_group(table, label, names, {"parts": parts}, size_cap)


def _rot_flip_table(m: int, rot_rule, flip_word: int) -> np.ndarray:
    """Cayley table for groups with elements a^i b^f, f in {0, 1}.

    ``rot_rule(i, k, fx)`` gives the rotation exponent of (a^i b^fx)(a^k ...)
    before reduction mod m; ``flip_word`` is the extra rotation gained when
    two flips cancel (b^2 = a^flip_word).
    """
    n = 2 * m
    idx = np.arange(n)
    r = idx % m
    f = idx // m
    rx, ry = r[:, None], r[None, :]
    fx, fy = f[:, None], f[None, :]
    rot = rot_rule(rx, ry, fx)
    rot = rot + np.where((fx == 1) & (fy == 1), flip_word, 0)
    rot %= m
    return rot + m * (fx ^ fy)


def make_dihedral(n: int, size_cap: int | None = None) -> FiniteGroup:
    """Dihedral group of order 2n: indices 0..n-1 are a^i, n..2n-1 are a^i*b."""
    if n < 2:
        raise InvalidParameterError("dihedral group needs n >= 2")
    _check_cap(2 * n, size_cap)
    table = _rot_flip_table(n, lambda rx, ry, fx: np.where(fx == 0, rx + ry, rx - ry), 0)
    names = [_two_gen_name(i % n, i // n, "a", "b") for i in range(2 * n)]
    return _finish_group(table, f"D_{2 * n}", names, {"n": n}, size_cap)


def make_semidihedral(n: int, size_cap: int | None = None) -> FiniteGroup:
    """Semidihedral group of order 8n with b*a = a^(2n-1)*b.

    Indices 0..4n-1 are a^i; 4n..8n-1 are a^i*b.  n = 1 is accepted: the
    relations then collapse to an abelian group and the caller's sweep
    decides what to make of it.
    """
    if n < 1:
        raise InvalidParameterError("semidihedral group needs n >= 1")
    m = 4 * n
    _check_cap(2 * m, size_cap)
    twist = 2 * n - 1
    table = _rot_flip_table(m, lambda rx, ry, fx: np.where(fx == 0, rx + ry, rx + ry * twist), 0)
    names = [_two_gen_name(i % m, i // m, "a", "b") for i in range(2 * m)]
    return _finish_group(table, f"SD_{8 * n}", names, {"n": n}, size_cap)


def make_generalized_quaternion(m: int, size_cap: int | None = None) -> FiniteGroup:
    """Generalized quaternion group of order 4m: a^(2m)=e, b^2=a^m, b a b^-1 = a^-1."""
    if m < 2:
        raise InvalidParameterError("generalized quaternion group needs m >= 2")
    _check_cap(4 * m, size_cap)
    table = _rot_flip_table(2 * m, lambda rx, ry, fx: np.where(fx == 0, rx + ry, rx - ry), m)
    names = [_two_gen_name(i % (2 * m), i // (2 * m), "a", "b") for i in range(4 * m)]
    return _finish_group(table, f"Q_{4 * m}", names, {"m": m}, size_cap)


def make_u6n(n: int, size_cap: int | None = None) -> FiniteGroup:
    """Order-6n group with a^(2n) = b^3 = e and b*a = a*b^-1.

    Element a^i*b^j has index 3*i + j.  The 3-adic split n = 3^k * t is
    stored in ``meta`` because the family's invariants are phrased in (k, t).
    """
    if n < 1:
        raise InvalidParameterError("u6n group needs n >= 1")
    order = 6 * n
    _check_cap(order, size_cap)
    idx = np.arange(order)
    ai = idx // 3
    bj = idx % 3
    ix, kx = ai[:, None], ai[None, :]
    jx, lx = bj[:, None], bj[None, :]
    # b^j * a^k = a^k * b^(-j) when k is odd
    j_through = np.where(kx % 2 == 0, jx, -jx)
    table = 3 * ((ix + kx) % (2 * n)) + (j_through + lx) % 3
    names = [_two_gen_name(int(ai[i]), int(bj[i]), "a", "b") for i in idx]
    k, t = split_3adic(n)
    return _finish_group(table, f"U_{6 * n}", names, {"n": n, "k": k, "t": t}, size_cap)


def direct_product(g: FiniteGroup, h: FiniteGroup, size_cap: int | None = None) -> FiniteGroup:
    """Componentwise product; index of (x, y) is x * h.order + y."""
    order = g.order * h.order
    _check_cap(order, size_cap)
    table = (g.table[:, None, :, None] * h.order + h.table[None, :, None, :]).reshape(order, order)
    names = [f"({a},{b})" for a in g.elem_names for b in h.elem_names]
    label = f"({g.label})x({h.label})"
    return _finish_group(table, label, names, {"factors": (g.label, h.label)}, size_cap)


# ---------------------------------------------------------------------------
# cyclic subgroup machinery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclicEntry:
    generator: int
    members: frozenset[int]
    order: int


@dataclass(frozen=True)
class CyclicSubgroupSet:
    """All distinct cyclic subgroups of a group, with maximal ones flagged."""

    entries: tuple[CyclicEntry, ...]
    maximal_flags: tuple[bool, ...]

    @property
    def maximal_entries(self) -> tuple[CyclicEntry, ...]:
        return tuple(e for e, f in zip(self.entries, self.maximal_flags) if f)

    @property
    def maximal_count(self) -> int:
        return sum(self.maximal_flags)


def cyclic_subgroups(g: FiniteGroup) -> CyclicSubgroupSet:
    """Enumerate distinct cyclic subgroups; entries sorted by (order, generator)."""
    seen: dict[frozenset[int], int] = {}
    for x in range(g.order):
        members = g.cyclic_members(x)
        if members not in seen:
            seen[members] = x
    entries = sorted(
        (CyclicEntry(generator=gen, members=members, order=len(members))
         for members, gen in seen.items()),
        key=lambda e: (e.order, e.generator),
    )
    flags = []
    for i, e in enumerate(entries):
        maximal = True
        for f in entries[i + 1:]:
            if f.order > e.order and e.members < f.members:
                maximal = False
                break
        flags.append(maximal)
    return CyclicSubgroupSet(entries=tuple(entries), maximal_flags=tuple(flags))


def involution_count(g: FiniteGroup) -> int:
    return sum(1 for o in g.elem_orders if o == 2)


def exponent(g: FiniteGroup) -> int:
    return lcm_all(g.elem_orders)


def all_cyclic_subgroups_prime_power(g: FiniteGroup) -> bool:
    """True iff every element order is 1 or a prime power."""
    return all(o == 1 or prime_power(o) is not None for o in g.elem_orders)


# ---------------------------------------------------------------------------
# group-spec grammar
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupSpec:
    """Parsed family descriptor: cyclic:n, abelian:p1^a1,..., product:(s)x(s), ..."""

    family: str
    params: tuple

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise InvalidParameterError(f"unknown family {self.family!r}")
        if self.family == "abelian":
            if not self.params:
                raise InvalidParameterError("abelian spec needs at least one part")
            for p in self.params:
                if prime_power(p) is None:
                    raise InvalidParameterError(f"abelian part {p} is not a prime power > 1")
        elif self.family == "product":
            if len(self.params) != 2 or not all(isinstance(s, GroupSpec) for s in self.params):
                raise InvalidParameterError("product spec needs two nested specs")
        else:
            (n,) = self.params
            minimum = {"cyclic": 1, "dihedral": 2, "semidihedral": 1,
                       "u6n": 1, "gen_quaternion": 2}[self.family]
            if n < minimum:
                raise InvalidParameterError(f"{self.family} parameter must be >= {minimum}")

    def __str__(self) -> str:
        if self.family == "abelian":
            parts = []
            for v in self.params:
                p, k = prime_power(v)
                parts.append(f"{p}^{k}" if k > 1 else str(p))
            return "abelian:" + ",".join(parts)
        if self.family == "product":
            left, right = self.params
            return f"product:({left})x({right})"
        tag = "genq" if self.family == "gen_quaternion" else self.family
        return f"{tag}:{self.params[0]}"


_SPEC_TAGS = {
    "cyclic": "cyclic",
    "abelian": "abelian",
    "dihedral": "dihedral",
    "semidihedral": "semidihedral",
    "u6n": "u6n",
    "genq": "gen_quaternion",
    "product": "product",
}


def parse_spec(text: str, offset: int = 0) -> GroupSpec:
    """Parse the spec grammar; SpecParseError carries the failing position."""
    text = text.strip()
    if ":" not in text:
        raise SpecParseError("expected 'family:params'", offset)
    tag, _, rest = text.partition(":")
    family = _SPEC_TAGS.get(tag.strip())
    if family is None:
        raise SpecParseError(f"unknown family {tag.strip()!r}", offset)
    body_at = offset + len(tag) + 1
    if family == "product":
        return _parse_product(rest, body_at)
    if family == "abelian":
        params = []
        pos = body_at
        for piece in rest.split(","):
            value = _parse_part(piece.strip(), pos)
            params.append(value)
            pos += len(piece) + 1
        try:
            return GroupSpec("abelian", tuple(params))
        except InvalidParameterError as exc:
            raise SpecParseError(str(exc), body_at) from exc
    if not re.fullmatch(r"\d+", rest.strip()):
        raise SpecParseError(f"expected an integer parameter, got {rest.strip()!r}", body_at)
    try:
        return GroupSpec(family, (int(rest),))
    except InvalidParameterError as exc:
        raise SpecParseError(str(exc), body_at) from exc


def _parse_part(piece: str, pos: int) -> int:
    m = re.fullmatch(r"(\d+)(?:\^(\d+))?", piece)
    if not m:
        raise SpecParseError(f"bad abelian part {piece!r}", pos)
    base = int(m.group(1))
    if m.group(2) is not None:
        if not is_prime(base):
            raise SpecParseError(f"base {base} of {piece!r} is not prime", pos)
        value = base ** int(m.group(2))
    else:
        value = base
    if prime_power(value) is None:
        raise SpecParseError(f"part {piece!r} is not a prime power > 1", pos)
    return value


def _parse_product(rest: str, pos: int) -> GroupSpec:
    def read_group(s: str, at: int) -> tuple[str, int]:
        if not s or s[0] != "(":
            raise SpecParseError("expected '(' in product spec", at)
        depth = 0
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    return s[1:i], i + 1
        raise SpecParseError("unbalanced parentheses in product spec", at)

    left_text, used = read_group(rest, pos)
    left = parse_spec(left_text, pos + 1)
    tail = rest[used:]
    if not tail.startswith("x"):
        raise SpecParseError("expected 'x' between product factors", pos + used)
    right_text, used2 = read_group(tail[1:], pos + used + 1)
    right = parse_spec(right_text, pos + used + 2)
    if tail[1 + used2:].strip():
        raise SpecParseError("trailing text after product spec", pos + used + 1 + used2)
    return GroupSpec("product", (left, right))


def build_group(spec: GroupSpec | str, size_cap: int | None = None) -> FiniteGroup:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if spec.family == "cyclic":
        return make_cyclic(spec.params[0], size_cap)
    if spec.family == "abelian":
        return make_abelian(spec.params, size_cap)
    if spec.family == "dihedral":
        return make_dihedral(spec.params[0], size_cap)
    if spec.family == "semidihedral":
        return make_semidihedral(spec.params[0], size_cap)
    if spec.family == "u6n":
        return make_u6n(spec.params[0], size_cap)
    if spec.family == "gen_quaternion":
        return make_generalized_quaternion(spec.params[0], size_cap)
    left, right = spec.params
    return direct_product(build_group(left, size_cap), build_group(right, size_cap), size_cap)


# ---------------------------------------------------------------------------
# Cayley-table text format
# ---------------------------------------------------------------------------

def save_cayley_text(g: FiniteGroup, stream: IO[str]) -> None:
    """Write `order n` then n rows of n space-separated indices."""
    stream.write(f"order {g.order}\n")
    for row in g.table:
        stream.write(" ".join(str(int(v)) for v in row) + "\n")


def load_cayley_text(stream: IO[str], label: str = "loaded",
                     size_cap: int | None = None) -> FiniteGroup:
    lines = [ln for ln in (raw.strip() for raw in stream) if ln]
    if not lines or not lines[0].startswith("order "):
        raise InvalidParameterError("Cayley file must start with 'order n'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise InvalidParameterError("bad order header in Cayley file") from exc
    if len(lines) != n + 1:
        raise InvalidParameterError(f"expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        row = [int(v) for v in ln.split()]
        if len(row) != n or any(v < 0 or v >= n for v in row):
            raise InvalidParameterError("table row is not a permutation of 0..n-1")
        rows.append(row)
    table = np.array(rows, dtype=np.int64)
    names = [f"g{i}" for i in range(n)]
    return _finish_group(table, label, names, {}, size_cap)

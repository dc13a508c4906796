"""Finite rings given by exact addition and multiplication tables.

Elements are the integers ``0 .. size-1``.  Subsets of a ring (ideals,
multiplicative sets) are bit-masks over those ids, see :mod:`orelab.bitset`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .bitset import contains, iter_bits, mask_of, popcount, to_list

EXHAUSTIVE_AXIOM_LIMIT = 64
AXIOM_SAMPLES = 10_000
AXIOM_SEED = 0

SIDES = ("left", "right")
KINDS = ("left", "right", "two-sided")


class RingError(ValueError):
    """A table failed a ring axiom; ``axiom`` and ``witness`` say where."""

    def __init__(self, axiom: str, witness: tuple = ()):
        self.axiom = axiom
        self.witness = tuple(witness)
        msg = f"ring axiom violated: {axiom}"
        if witness:
            msg += f" (witness {self.witness})"
        super().__init__(msg)


def _first_true(mask: np.ndarray) -> tuple:
    idx = np.argwhere(mask)
    return tuple(int(v) for v in idx[0])


def check_axioms(add: np.ndarray, mul: np.ndarray, zero: int, one: int,
                 seed: int = AXIOM_SEED) -> None:
    """Raise :class:`RingError` unless the tables define a ring with 1.

    Exhaustive up to ``EXHAUSTIVE_AXIOM_LIMIT`` elements, otherwise
    ``AXIOM_SAMPLES`` random triples drawn with a fixed seed.
    """
    n = add.shape[0]
    if add.shape != (n, n) or mul.shape != (n, n):
        raise RingError("tables must be square and of equal size")
    if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
        raise RingError("table entry out of range")
    if zero == one:
        raise RingError("one != zero")
    ids = np.arange(n)
    bad = add[zero] != ids
    if bad.any() or (add[:, zero] != ids).any():
        raise RingError("additive identity", (zero, int(np.argmax(bad))))
    if not (add == add.T).all():
        raise RingError("addition commutative", _first_true(add != add.T))
    if not ((add == zero).sum(axis=1) == 1).all():
        raise RingError("additive inverse", (int(np.argmin((add == zero).sum(axis=1))),))
    bad = (mul[one] != ids) | (mul[:, one] != ids)
    if bad.any():
        raise RingError("multiplicative identity", (one, int(np.argmax(bad))))

    if n <= EXHAUSTIVE_AXIOM_LIMIT:
        a, b, c = np.meshgrid(ids, ids, ids, indexing="ij")
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, AXIOM_SAMPLES))
    checks = (
        ("addition associative", add[add[a, b], c] != add[a, add[b, c]]),
        ("multiplication associative", mul[mul[a, b], c] != mul[a, mul[b, c]]),
        ("left distributive", mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]),
        ("right distributive", mul[add[a, b], c] != add[mul[a, c], mul[b, c]]),
    )
    for name, bad in checks:
        if bad.any():
            pos = _first_true(bad)
            if a.ndim == 3:
                raise RingError(name, pos)
            k = pos[0]
            raise RingError(name, (int(a[k]), int(b[k]), int(c[k])))


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A ring with 1 on the ids ``0..size-1``.

    ``factors`` is set by :func:`product_ring` so that product identities
    can be checked against the components.
    """

    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    label: str = "R"
    factors: tuple["FiniteRing", ...] = ()
    names: tuple[str, ...] | None = None
    checked: bool = field(default=True, repr=False)

    def __post_init__(self):
        add = np.ascontiguousarray(self.add, dtype=np.int64)
        mul = np.ascontiguousarray(self.mul, dtype=np.int64)
        add.setflags(write=False)
        mul.setflags(write=False)
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "mul", mul)
        if self.checked:
            check_axioms(add, mul, self.zero, self.one)

    @property
    def size(self) -> int:
        return self.add.shape[0]

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, size={self.size})"

    def __len__(self) -> int:
        return self.size

    @cached_property
    def A(self) -> list[list[int]]:
        """Addition table as nested lists (faster than numpy for scalar lookups)."""
        return self.add.tolist()

    @cached_property
    def M(self) -> list[list[int]]:
        return self.mul.tolist()

    @cached_property
    def neg(self) -> list[int]:
        return [int(np.argmax(row == self.zero)) for row in self.add]

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @cached_property
    def units_mask(self) -> int:
        """Two-sided units, found by solving ``ux = 1`` and ``xu = 1`` directly."""
        one = self.one
        m = 0
        for u in range(self.size):
            row = self.M[u]
            right = [x for x in range(self.size) if row[x] == one]
            if any(self.M[x][u] == one for x in right):
                m |= 1 << u
        return m

    @cached_property
    def memo(self) -> dict:
        """Per-ring cache for pure derived data (classifications, quotients)."""
        return {}

    @cached_property
    def is_commutative(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    @cached_property
    def opposite(self) -> "FiniteRing":
        """Same additive group, multiplication ``a*b := b*a``."""
        op = FiniteRing(self.add, self.mul.T, self.zero, self.one,
                        label=f"op({self.label})", names=self.names, checked=False)
        object.__setattr__(op, "opposite", self)
        return op

    def name(self, x: int) -> str:
        return self.names[x] if self.names else str(x)

    def elements(self) -> range:
        return range(self.size)

    def sub(self, a: int, b: int) -> int:
        return self.A[a][self.neg[b]]

    def power(self, a: int, k: int) -> int:
        r = self.one
        for _ in range(k):
            r = self.M[r][a]
        return r

    def table_spec(self) -> str:
        """Render as a ``table{...}`` ring-spec expression."""
        elems = ",".join(str(i) for i in range(self.size))
        add = ",".join("[" + ",".join(map(str, r)) + "]" for r in self.A)
        mul = ",".join("[" + ",".join(map(str, r)) + "]" for r in self.M)
        return f"table{{elements=[{elems}]; add=[{add}]; mul=[{mul}]; one={self.one}}}"


def from_operations(elements: Sequence, add, mul, zero, one, label: str,
                    factors=(), names=None) -> FiniteRing:
    """Tabulate ``add``/``mul`` over a list of hashable elements."""
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    at = np.empty((n, n), dtype=np.int64)
    mt = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            at[i, j] = index[add(x, y)]
            mt[i, j] = index[mul(x, y)]
    return FiniteRing(at, mt, index[zero], index[one], label=label,
                      factors=tuple(factors), names=names)


# --- constructors -----------------------------------------------------------

def zmod(n: int) -> FiniteRing:
    if n < 2:
        raise ValueError(f"zmod needs n >= 2, got {n}")
    ids = np.arange(n)
    add = (ids[:, None] + ids[None, :]) % n
    mul = (ids[:, None] * ids[None, :]) % n
    return FiniteRing(add, mul, 0, 1 % n, label=f"zmod({n})")


def _digits(x: int, base: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        x, d = divmod(x, base)
        out.append(d)
    return tuple(reversed(out))


def _matrix_like(base: FiniteRing, k: int, positions: list[tuple[int, int]],
                 label: str) -> FiniteRing:
    b = base.size
    width = len(positions)
    size = b ** width
    if size > 4096:
        raise ValueError(f"{label} would have {size} elements (limit 4096)")
    slot = {p: t for t, p in enumerate(positions)}
    A, M = base.A, base.M
    z = base.zero
    elements = [_digits(x, b, width) for x in range(size)]

    def entry(m, i, j):
        t = slot.get((i, j))
        return z if t is None else m[t]

    def add(x, y):
        return tuple(A[p][q] for p, q in zip(x, y))

    def mul(x, y):
        out = []
        for (i, j) in positions:
            acc = z
            for l in range(k):
                acc = A[acc][M[entry(x, i, l)][entry(y, l, j)]]
            out.append(acc)
        return tuple(out)

    zero = tuple([z] * width)
    one = tuple(base.one if i == j else z for (i, j) in positions)
    return from_operations(elements, add, mul, zero, one, label)


def matrix_ring(base: FiniteRing, k: int) -> FiniteRing:
    """``k x k`` matrices; id = entries in row-major order, first entry most significant."""
    if k < 1:
        raise ValueError("matrix size must be >= 1")
    positions = [(i, j) for i in range(k) for j in range(k)]
    return _matrix_like(base, k, positions, f"matrix({base.label},{k})")


def triangular_ring(base: FiniteRing, k: int) -> FiniteRing:
    """Upper-triangular ``k x k`` matrices, entries on/above the diagonal in row-major order."""
    if k < 1:
        raise ValueError("matrix size must be >= 1")
    positions = [(i, j) for i in range(k) for j in range(i, k)]
    return _matrix_like(base, k, positions, f"triangular({base.label},{k})")


def product_ring(*rings: FiniteRing) -> FiniteRing:
    """Direct product; ids are lexicographic in the component ids."""
    if not rings:
        raise ValueError("product needs at least one factor")
    size = 1
    for r in rings:
        size *= r.size
    if size > 4096:
        raise ValueError(f"product would have {size} elements (limit 4096)")
    elements = list(itertools.product(*(range(r.size) for r in rings)))

    def add(x, y):
        return tuple(r.A[a][b] for r, a, b in zip(rings, x, y))

    def mul(x, y):
        return tuple(r.M[a][b] for r, a, b in zip(rings, x, y))

    label = "product(" + ",".join(r.label for r in rings) + ")"
    return from_operations(elements, add, mul, tuple(r.zero for r in rings),
                           tuple(r.one for r in rings), label, factors=rings)


def product_coords(R: FiniteRing, x: int) -> tuple[int, ...]:
    """Component ids of ``x`` in a ring built by :func:`product_ring`."""
    out = []
    for r in reversed(R.factors):
        x, d = divmod(x, r.size)
        out.append(d)
    return tuple(reversed(out))


def cyclic_group(n: int):
    elems = list(range(n))
    return elems, (lambda g, h: (g + h) % n), 0, f"C{n}"


def symmetric_group_3():
    elems = list(itertools.permutations(range(3)))
    return elems, (lambda g, h: tuple(g[h[i]] for i in range(3))), (0, 1, 2), "S3"


def group_algebra(base: FiniteRing, group: str) -> FiniteRing:
    """``base[G]`` for ``G`` = ``C<n>`` or ``S3``; ids are coefficient vectors in group order."""
    if group == "S3":
        gelems, gmul, gid, gname = symmetric_group_3()
    elif group.startswith("C") and group[1:].isdigit() and int(group[1:]) >= 1:
        gelems, gmul, gid, gname = cyclic_group(int(group[1:]))
    else:
        raise ValueError(f"unknown group {group!r} (expected C<n> or S3)")
    gi = {g: i for i, g in enumerate(gelems)}
    table = [[gi[gmul(g, h)] for h in gelems] for g in gelems]
    n, b = len(gelems), base.size
    size = b ** n
    if size > 4096:
        raise ValueError(f"group algebra would have {size} elements (limit 4096)")
    A, M, z = base.A, base.M, base.zero
    elements = [_digits(x, b, n) for x in range(size)]

    def add(x, y):
        return tuple(A[p][q] for p, q in zip(x, y))

    def mul(x, y):
        out = [z] * n
        for i in range(n):
            if x[i] == z:
                continue
            for j in range(n):
                t = table[i][j]
                out[t] = A[out[t]][M[x[i]][y[j]]]
        return tuple(out)

    zero = tuple([z] * n)
    one = tuple(base.one if i == gi[gid] else z for i in range(n))
    return from_operations(elements, add, mul, zero, one,
                           f"group_algebra({base.label},{gname})")


def table_ring(add, mul, one: int, label: str = "table", names=None) -> FiniteRing:
    add = np.asarray(add, dtype=np.int64)
    mul = np.asarray(mul, dtype=np.int64)
    n = add.shape[0] if add.ndim == 2 else 0
    if add.ndim != 2 or mul.shape != add.shape or add.shape != (n, n):
        raise RingError("tables must be square and of equal size")
    zeros = [z for z in range(n) if (add[z] == np.arange(n)).all()]
    if not zeros:
        raise RingError("additive identity")
    return FiniteRing(add, mul, zeros[0], one, label=label,
                      names=tuple(map(str, names)) if names is not None else None)


# --- ideals and morphisms ---------------------------------------------------

@dataclass(frozen=True)
class IdealData:
    kind: str
    members: int
    generators: tuple[int, ...] = ()

    def __contains__(self, x: int) -> bool:
        return contains(self.members, x)

    def __len__(self) -> int:
        return popcount(self.members)

    def elements(self) -> list[int]:
        return to_list(self.members)


@dataclass(frozen=True, eq=False)
class RingMorphism:
    source: FiniteRing
    target: FiniteRing
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def image_mask(self, mask: int) -> int:
        return mask_of(self.map[x] for x in iter_bits(mask))

    def preimage_mask(self, mask: int) -> int:
        return mask_of(x for x, y in enumerate(self.map) if contains(mask, y))

    def kernel(self) -> int:
        return mask_of(x for x, y in enumerate(self.map) if y == self.target.zero)

    def is_bijective(self) -> bool:
        return len(set(self.map)) == self.source.size == self.target.size

    def check(self) -> tuple | None:
        """First violated homomorphism law as ``(law, x, y)``; ``None`` if it is a morphism."""
        S, T, f = self.source, self.target, self.map
        if len(f) != S.size:
            return ("length", len(f), S.size)
        if f[S.one] != T.one:
            return ("one", S.one, f[S.one])
        for x in range(S.size):
            for y in range(S.size):
                if f[S.A[x][y]] != T.A[f[x]][f[y]]:
                    return ("additive", x, y)
                if f[S.M[x][y]] != T.M[f[x]][f[y]]:
                    return ("multiplicative", x, y)
        return None

    def compose(self, other: "RingMorphism") -> "RingMorphism":
        """``self o other``."""
        return RingMorphism(other.source, self.target, tuple(self.map[y] for y in other.map))


def identity_morphism(R: FiniteRing) -> RingMorphism:
    return RingMorphism(R, R, tuple(range(R.size)))


def regular_elements(R: FiniteRing, side: str = "both") -> int:
    """Elements ``r`` with ``r*x = 0 => x = 0`` (left), ``x*r = 0 => x = 0`` (right), or both."""
    M, z = R.M, R.zero
    left = right = 0
    for r in range(R.size):
        if sum(1 for x in range(R.size) if M[r][x] == z) == 1:
            left |= 1 << r
        if sum(1 for x in range(R.size) if M[x][r] == z) == 1:
            right |= 1 << r
    if side == "left":
        return left
    if side == "right":
        return right
    if side == "both":
        return left & right
    raise ValueError(f"side must be left, right or both, not {side!r}")


def units(R: FiniteRing) -> int:
    return R.units_mask


def _additive_closure_step(R: FiniteRing, members: set[int], x: int, todo: list[int]):
    for y in list(members):
        s = R.A[x][y]
        if s not in members:
            members.add(s)
            todo.append(s)


def ideal_generated_by(R: FiniteRing, gens: Iterable[int], kind: str = "two-sided") -> IdealData:
    """Smallest ``kind`` ideal containing ``gens`` (worklist closure)."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, not {kind!r}")
    gens = tuple(dict.fromkeys(int(g) for g in gens))
    members = {R.zero}
    todo = []
    for g in gens:
        if g not in members:
            members.add(g)
            todo.append(g)
    M, A = R.M, R.A
    while todo:
        x = todo.pop()
        new = [A[x][y] for y in members]
        if kind in ("left", "two-sided"):
            new += [M[r][x] for r in range(R.size)]
        if kind in ("right", "two-sided"):
            new += [M[x][r] for r in range(R.size)]
        new.append(R.neg[x])
        for y in new:
            if y not in members:
                members.add(y)
                todo.append(y)
    return IdealData(kind, mask_of(members), gens)


def is_ideal(R: FiniteRing, mask: int, kind: str = "two-sided") -> bool:
    els = to_list(mask)
    if not contains(mask, R.zero):
        return False
    for x in els:
        for y in els:
            if not contains(mask, R.A[x][y]):
                return False
        for r in range(R.size):
            if kind in ("left", "two-sided") and not contains(mask, R.M[r][x]):
                return False
            if kind in ("right", "two-sided") and not contains(mask, R.M[x][r]):
                return False
    return True


def ideal_sum(R: FiniteRing, a: int, b: int) -> int:
    """``a + b`` for two additive subgroups."""
    out = 0
    bl = to_list(b)
    for x in iter_bits(a):
        row = R.A[x]
        for y in bl:
            out |= 1 << row[y]
    return out


def ideal_product(R: FiniteRing, a: int, b: int, kind: str = "two-sided") -> int:
    """Additive span of ``{xy : x in a, y in b}``, closed to an ideal of ``kind``."""
    prods = {R.M[x][y] for x in iter_bits(a) for y in iter_bits(b)}
    return ideal_generated_by(R, prods, kind).members


def all_ideals(R: FiniteRing, kind: str = "two-sided") -> list[IdealData]:
    """Every ideal of ``kind``: join closure of the principal ones, sorted by (size, members)."""
    principal = {}
    for x in range(R.size):
        I = ideal_generated_by(R, [x], kind)
        principal.setdefault(I.members, I)
    found = {m: principal[m] for m in principal}
    frontier = list(found)
    while frontier:
        nxt = []
        for a in frontier:
            for p in principal:
                if p & ~a == 0:
                    continue
                s = ideal_sum(R, a, p)
                if s not in found:
                    gens = tuple(sorted(set(found[a].generators) | set(principal[p].generators)))
                    found[s] = IdealData(kind, s, gens)
                    nxt.append(s)
        frontier = nxt
    return sorted(found.values(), key=lambda I: (popcount(I.members), I.members))


def quotient_ring(R: FiniteRing, a: IdealData) -> tuple[FiniteRing, RingMorphism]:
    """``R/a`` with the projection; each coset is represented by its least id."""
    if contains(a.members, R.one):
        raise ValueError("quotient by an improper ideal")
    if not is_ideal(R, a.members, "two-sided"):
        raise ValueError("mask is not a two-sided ideal")
    if a.members == 1 << R.zero:
        return R, identity_morphism(R)
    key = ("quotient", a.members)
    if key not in R.memo:
        R.memo[key] = _quotient(R, a)
    return R.memo[key]


def _quotient(R: FiniteRing, a: IdealData) -> tuple[FiniteRing, RingMorphism]:
    ids = to_list(a.members)
    rep = [min(R.A[x][i] for i in ids) for x in range(R.size)]
    reps = sorted(set(rep))
    index = {r: k for k, r in enumerate(reps)}
    n = len(reps)
    add = np.empty((n, n), dtype=np.int64)
    mul = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(reps):
        for j, y in enumerate(reps):
            add[i, j] = index[rep[R.A[x][y]]]
            mul[i, j] = index[rep[R.M[x][y]]]
    names = tuple(f"{R.name(r)}+I" for r in reps) if R.names else None
    Q = FiniteRing(add, mul, index[rep[R.zero]], index[rep[R.one]],
                   label=f"{R.label}/<{','.join(map(str, to_list(a.members)))}>",
                   names=names, checked=R.size <= EXHAUSTIVE_AXIOM_LIMIT)
    return Q, RingMorphism(R, Q, tuple(index[rep[x]] for x in range(R.size)))


def is_semiprime(R: FiniteRing) -> tuple[bool, IdealData | None]:
    """No nonzero two-sided ideal squares to zero; the witness is such an ideal.

    It is enough to test principal ideals: a nilpotent ideal contains a
    nonzero ideal of square zero, which contains a nonzero principal one.
    """
    for x in range(R.size):
        if x == R.zero:
            continue
        I = ideal_generated_by(R, [x], "two-sided")
        if ideal_product(R, I.members, I.members) == 1 << R.zero:
            return False, I
    return True, None


def jacobson_radical(R: FiniteRing) -> int:
    """``{x : 1 - r x is a unit for every r}``."""
    U = R.units_mask
    one = R.one
    out = 0
    for x in range(R.size):
        if all(contains(U, R.sub(one, R.M[r][x])) for r in range(R.size)):
            out |= 1 << x
    return out


def idempotents(R: FiniteRing) -> list[int]:
    return [e for e in range(R.size) if R.M[e][e] == e]


def center(R: FiniteRing) -> int:
    mul = R.mul
    return mask_of(int(c) for c in np.flatnonzero((mul == mul.T).all(axis=1)))


def corner_ring(R: FiniteRing, e: int, label: str | None = None) -> tuple[FiniteRing, RingMorphism]:
    """For a central idempotent ``e``: the ring ``eR`` with unit ``e`` and ``x -> e x``."""
    elems = sorted({R.M[e][x] for x in range(R.size)})
    index = {v: k for k, v in enumerate(elems)}
    n = len(elems)
    add = np.array([[index[R.A[x][y]] for y in elems] for x in elems], dtype=np.int64).reshape(n, n)
    mul = np.array([[index[R.M[x][y]] for y in elems] for x in elems], dtype=np.int64).reshape(n, n)
    F = FiniteRing(add, mul, index[R.zero], index[e], label=label or f"{R.label}*e{e}",
                   checked=False)
    return F, RingMorphism(R, F, tuple(index[R.M[e][x]] for x in range(R.size)))


def central_idempotent_decomposition(R: FiniteRing) -> list[tuple[int, FiniteRing, RingMorphism]]:
    """Primitive central idempotents with their factor rings ``eR`` and projections."""
    Z = center(R)
    cent = [e for e in idempotents(R) if contains(Z, e) and e != R.zero]
    # e is primitive iff no other nonzero central idempotent f satisfies fe = f
    prim = [e for e in cent if not any(f != e and R.M[f][e] == f for f in cent)]
    out = []
    for e in sorted(prim):
        F, p = corner_ring(R, e, label=f"{R.label}*e{e}")
        out.append((e, F, p))
    return out


# --- homomorphism search ----------------------------------------------------

def additive_generators(R: FiniteRing) -> list[int]:
    """Greedy generating set of the additive group, smallest ids first."""
    gens: list[int] = []
    span = 1 << R.zero
    for x in range(R.size):
        if contains(span, x):
            continue
        gens.append(x)
        span = ideal_generated_by_additive(R, span, x)
        if span == R.full_mask:
            break
    return gens


def ideal_generated_by_additive(R: FiniteRing, span: int, x: int) -> int:
    """Additive subgroup generated by the subgroup ``span`` and ``x``."""
    multiples = {R.zero}
    y = x
    while y not in multiples:
        multiples.add(y)
        y = R.A[y][x]
    return ideal_sum(R, span, mask_of(multiples))


def ring_homomorphisms(R: FiniteRing, Q: FiniteRing) -> Iterator[RingMorphism]:
    """All unital ring homomorphisms ``R -> Q``, by exhaustive search on additive generators."""
    gens = additive_generators(R)
    # express every element as a word in the generators: x = sum_k c_k * g_k
    expr: dict[int, tuple[int, ...]] = {R.zero: tuple(0 for _ in gens)}
    frontier = [R.zero]
    while frontier:
        nxt = []
        for x in frontier:
            for k, g in enumerate(gens):
                y = R.A[x][g]
                if y not in expr:
                    c = list(expr[x])
                    c[k] += 1
                    expr[y] = tuple(c)
                    nxt.append(y)
        frontier = nxt

    for images in itertools.product(range(Q.size), repeat=len(gens)):
        f = []
        for x in range(R.size):
            acc = Q.zero
            for k, c in enumerate(expr[x]):
                for _ in range(c):
                    acc = Q.A[acc][images[k]]
            f.append(acc)
        phi = RingMorphism(R, Q, tuple(f))
        if phi.check() is None:
            yield phi


def automorphisms(R: FiniteRing) -> list[RingMorphism]:
    return [f for f in ring_homomorphisms(R, R) if f.is_bijective()]

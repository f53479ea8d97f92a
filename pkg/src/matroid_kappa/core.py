"""Ground sets, element sets, independence oracles and finite matroids.

Element sets are stored as bitmasks over a fixed, ordered ground set.  The
order in which labels were first listed is the canonical order; every
greedy choice and every enumeration in the package breaks ties by it,
which makes all results reproducible.

A :class:`Matroid` is an independence oracle, a pure function from element
sets to booleans.  Concrete representations (uniform, graphic, binary
linear, explicit family) supply the oracle; duals and minors wrap oracles
of other matroids instead of materialising set families.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator

from . import budgets
from .errors import (
    CapacityError,
    DomainError,
    PreconditionError,
    UniverseMismatchError,
)


class GroundSet:
    """An ordered collection of distinct element labels.

    Iteration order is the canonical order and is stable for the lifetime
    of the object.  Two ground sets compare equal when they carry the same
    labels in the same order, so element sets built from equal ground sets
    are interchangeable.
    """

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        self.labels = tuple(str(x) for x in labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            seen: set[str] = set()
            for lab in self.labels:
                if lab in seen:
                    raise DomainError(f"duplicate element label {lab!r}")
                seen.add(lab)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"GroundSet({list(self.labels)!r})"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f"unknown element label {label!r}") from None

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def empty(self) -> "ElementSet":
        return ElementSet(self, 0)

    def full(self) -> "ElementSet":
        return ElementSet(self, self.full_mask)

    def singleton(self, label: str) -> "ElementSet":
        return ElementSet(self, 1 << self.index(label))

    def set_of(self, labels: Iterable[str]) -> "ElementSet":
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return ElementSet(self, mask)

    def from_mask(self, mask: int) -> "ElementSet":
        if mask & ~self.full_mask:
            raise DomainError("mask has bits outside the ground set")
        return ElementSet(self, mask)


class ElementSet:
    """An immutable subset of a ground set.

    Equality is extensional within a universe; set algebra between
    different universes raises :class:`UniverseMismatchError`.
    """

    __slots__ = ("ground", "mask")

    def __init__(self, ground: GroundSet, mask: int):
        self.ground = ground
        self.mask = mask

    def _require_same(self, other: "ElementSet") -> None:
        if self.ground != other.ground:
            raise UniverseMismatchError(
                "element sets live over different ground sets"
            )

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[str]:
        labels = self.ground.labels
        for i in _bit_indices(self.mask):
            yield labels[i]

    def __contains__(self, label: object) -> bool:
        if not isinstance(label, str) or label not in self.ground:
            return False
        return bool(self.mask >> self.ground.index(label) & 1)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ElementSet)
            and self.ground == other.ground
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.mask))

    def __repr__(self) -> str:
        return "{" + ",".join(self) + "}"

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._require_same(other)
        return ElementSet(self.ground, self.mask | other.mask)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._require_same(other)
        return ElementSet(self.ground, self.mask & other.mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._require_same(other)
        return ElementSet(self.ground, self.mask & ~other.mask)

    def __le__(self, other: "ElementSet") -> bool:
        self._require_same(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "ElementSet") -> bool:
        return self <= other and self.mask != other.mask

    def isdisjoint(self, other: "ElementSet") -> bool:
        self._require_same(other)
        return self.mask & other.mask == 0

    def complement(self) -> "ElementSet":
        return ElementSet(self.ground, self.ground.full_mask & ~self.mask)

    def with_element(self, label: str) -> "ElementSet":
        return ElementSet(self.ground, self.mask | 1 << self.ground.index(label))

    def without(self, label: str) -> "ElementSet":
        return ElementSet(self.ground, self.mask & ~(1 << self.ground.index(label)))

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    def labels(self) -> tuple[str, ...]:
        return tuple(self)

    def indices(self) -> tuple[int, ...]:
        return tuple(_bit_indices(self.mask))

    def sort_key(self) -> tuple[int, ...]:
        """Key of the canonical subset order (lexicographic over indices)."""
        return self.indices()

    def in_universe(self, ground: GroundSet) -> "ElementSet":
        """The same labels as a set over another ground set."""
        return ground.set_of(self)


def _bit_indices(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def iter_submasks_lex(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in canonical subset order.

    Canonical subset order is lexicographic over increasing index tuples:
    {} < {0} < {0,1} < {0,1,2} < {0,2} < {1} < ...
    """
    bits = [1 << i for i in _bit_indices(mask)]
    n = len(bits)

    def rec(acc: int, start: int) -> Iterator[int]:
        yield acc
        for i in range(start, n):
            yield from rec(acc | bits[i], i + 1)

    return rec(0, 0)


def iter_submasks_binary(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in binary counting order.

    Bit i of the counter toggles the i-th lowest set bit of ``mask``; the
    empty set comes first.  This is the scan order of partition searches.
    """
    bits = [1 << i for i in _bit_indices(mask)]
    for counter in range(1 << len(bits)):
        sub = 0
        rem = counter
        j = 0
        while rem:
            if rem & 1:
                sub |= bits[j]
            rem >>= 1
            j += 1
        yield sub


def submasks_of_size(mask: int, size: int) -> Iterator[int]:
    """All submasks of ``mask`` with ``size`` bits, canonical combination order."""
    bits = [1 << i for i in _bit_indices(mask)]
    for combo in itertools.combinations(bits, size):
        acc = 0
        for b in combo:
            acc |= b
        yield acc


class Matroid:
    """A finite matroid given by an independence oracle over a ground set.

    The oracle must be pure: deterministic and side-effect free.  Verdicts
    are memoised on the instance; the memo only grows and recomputation is
    idempotent, so instances are safe to share read-only across workers.

    ``rep`` tags how the matroid was built (uniform, graphic, gf2,
    explicit or derived) and ``rep_data`` carries representation details
    that some operations use for exact fast paths.
    """

    __slots__ = ("ground", "rep", "rep_data", "_oracle", "_memo", "_cache")

    def __init__(
        self,
        ground: GroundSet,
        oracle: Callable[[int], bool],
        rep: str = "derived",
        rep_data: dict | None = None,
    ):
        self.ground = ground
        self.rep = rep
        self.rep_data = rep_data or {}
        self._oracle = oracle
        self._memo: dict[int, bool] = {}
        self._cache: dict[str, object] = {}

    def __repr__(self) -> str:
        return f"Matroid({self.rep}, n={len(self.ground)})"

    def __len__(self) -> int:
        return len(self.ground)

    # -- oracle ----------------------------------------------------------

    def _indep(self, mask: int) -> bool:
        memo = self._memo
        hit = memo.get(mask)
        if hit is None:
            hit = memo[mask] = self._oracle(mask)
        return hit

    def _check_universe(self, s: ElementSet) -> None:
        if s.ground != self.ground:
            raise UniverseMismatchError("set does not live over this matroid's ground set")

    def is_independent(self, s: ElementSet) -> bool:
        self._check_universe(s)
        return self._indep(s.mask)

    # -- bases and rank --------------------------------------------------

    def _greedy_basis_mask(self, within: int, start: int = 0) -> int:
        """Grow ``start`` to a maximal independent subset of ``within``.

        Candidates are scanned in canonical order, so the result is
        deterministic.  Exchange guarantees all maximal independent
        subsets of a set have equal size, hence this computes rank.
        """
        cur = start
        rest = within & ~start
        indep = self._indep
        while rest:
            low = rest & -rest
            rest ^= low
            if indep(cur | low):
                cur |= low
        return cur

    def rank(self, s: ElementSet | None = None) -> int:
        """Size of a maximal independent subset of ``s`` (default: the ground set)."""
        if s is None:
            return self.full_rank
        self._check_universe(s)
        return self._greedy_basis_mask(s.mask).bit_count()

    @property
    def full_rank(self) -> int:
        r = self._cache.get("full_rank")
        if r is None:
            r = self._greedy_basis_mask(self.ground.full_mask).bit_count()
            self._cache["full_rank"] = r
        return r

    def basis(self) -> ElementSet:
        """The canonical (greedy, first-fit) basis of the whole matroid."""
        b = self._cache.get("basis_mask")
        if b is None:
            b = self._greedy_basis_mask(self.ground.full_mask)
            self._cache["basis_mask"] = b
        return ElementSet(self.ground, b)

    def extend_to_basis(
        self, independent: ElementSet, within: ElementSet | None = None
    ) -> ElementSet:
        """Extend an independent set to one maximal inside ``within``.

        Raises ``PreconditionError`` when the start set is dependent and
        ``DomainError`` when it is not contained in ``within``.
        """
        self._check_universe(independent)
        if within is None:
            within = self.ground.full()
        else:
            self._check_universe(within)
        if independent.mask & ~within.mask:
            raise DomainError("start set is not contained in the extension range")
        if not self._indep(independent.mask):
            raise PreconditionError("cannot extend a dependent set")
        return ElementSet(
            self.ground, self._greedy_basis_mask(within.mask, independent.mask)
        )

    # -- circuits --------------------------------------------------------

    def circuits(self, budget: int | None = None) -> list[ElementSet]:
        """All inclusion-minimal dependent sets, in canonical subset order.

        Raises ``CapacityError`` when the ground set exceeds the
        enumeration budget (default from :mod:`matroid_kappa.budgets`).
        """
        if budget is None:
            budget = budgets.CIRCUIT_ENUMERATION
        n = len(self.ground)
        if n > budget:
            raise CapacityError(
                f"circuit enumeration over {n} elements exceeds budget {budget}"
            )
        masks = self._cache.get("circuit_masks")
        if masks is None:
            masks = self._circuit_masks()
            self._cache["circuit_masks"] = masks
        return [ElementSet(self.ground, m) for m in masks]

    def _circuit_masks(self) -> tuple[int, ...]:
        fast = self.rep_data.get("fast_circuits")
        if fast is not None:
            found = list(fast())
        else:
            found = []
            indices = range(len(self.ground))
            for size in range(1, len(self.ground) + 1):
                for combo in itertools.combinations(indices, size):
                    mask = 0
                    for i in combo:
                        mask |= 1 << i
                    if any(c & mask == c for c in found):
                        continue
                    if not self._indep(mask):
                        found.append(mask)
        found.sort(key=lambda m: tuple(_bit_indices(m)))
        return tuple(found)

    def is_circuit(self, s: ElementSet) -> bool:
        """True when ``s`` is dependent and every proper subset is independent."""
        self._check_universe(s)
        mask = s.mask
        if mask == 0 or self._indep(mask):
            return False
        for i in _bit_indices(mask):
            if not self._indep(mask & ~(1 << i)):
                return False
        return True

    def find_circuit_in(self, s: ElementSet) -> ElementSet | None:
        """A canonical circuit inside ``s``, or None when ``s`` is independent.

        Elements are dropped in canonical order while the set stays
        dependent, which lands on a minimal dependent subset.
        """
        self._check_universe(s)
        mask = s.mask
        if self._indep(mask):
            return None
        for i in _bit_indices(mask):
            trial = mask & ~(1 << i)
            if not self._indep(trial):
                mask = trial
        return ElementSet(self.ground, mask)

    def fundamental_circuit(self, base: ElementSet, x: str) -> ElementSet:
        """The unique circuit inside ``base + x`` for a basis ``base``."""
        self._check_universe(base)
        xbit = 1 << self.ground.index(x)
        if base.mask & xbit:
            raise PreconditionError(f"element {x!r} already lies in the basis")
        if not self._indep(base.mask) or base.mask.bit_count() != self.full_rank:
            raise PreconditionError("the given set is not a basis")
        circuit = self.find_circuit_in(ElementSet(self.ground, base.mask | xbit))
        if circuit is None:
            raise PreconditionError("basis plus element is independent")
        return circuit

    def cocircuits(self, budget: int | None = None) -> list[ElementSet]:
        return self.dual().circuits(budget)

    # -- derived matroids (implementations live in constructions.py) ------

    def dual(self) -> "Matroid":
        from .constructions import dual

        return dual(self)

    def restrict(self, keep: ElementSet) -> "Matroid":
        from .constructions import restrict

        return restrict(self, keep)

    def delete(self, drop: ElementSet) -> "Matroid":
        from .constructions import delete

        return delete(self, drop)

    def contract(self, away: ElementSet) -> "Matroid":
        from .constructions import contract

        return contract(self, away)

    def minor(self, contract_set: ElementSet, delete_set: ElementSet) -> "Matroid":
        from .constructions import MinorSpec, take_minor

        return take_minor(self, MinorSpec(contract_set, delete_set))


def same_independence(m1: Matroid, m2: Matroid) -> bool:
    """Oracle equality over every subset; grounds must carry equal labels."""
    if m1.ground != m2.ground:
        return False
    for mask in range(m1.ground.full_mask + 1):
        if m1._indep(mask) != m2._indep(mask):
            return False
    return True


# ---------------------------------------------------------------------------
# concrete representations
# ---------------------------------------------------------------------------


def uniform_matroid(labels: Iterable[str], k: int) -> Matroid:
    """Uniform matroid: a set is independent iff it has at most ``k`` elements."""
    ground = labels if isinstance(labels, GroundSet) else GroundSet(labels)
    if k < 0:
        raise DomainError("uniform rank bound must be non-negative")
    n = len(ground)

    def oracle(mask: int) -> bool:
        return mask.bit_count() <= k

    def fast_circuits() -> list[int]:
        if k >= n:
            return []
        return list(submasks_of_size(ground.full_mask, k + 1))

    return Matroid(
        ground,
        oracle,
        rep="uniform",
        rep_data={"k": k, "fast_circuits": fast_circuits},
    )


def free_matroid(labels: Iterable[str]) -> Matroid:
    """Every subset independent."""
    ground = labels if isinstance(labels, GroundSet) else GroundSet(labels)
    return uniform_matroid(ground, len(ground))


def graphic_matroid(edges: Iterable[tuple[str, str, str]]) -> Matroid:
    """Finite-cycle matroid of a multigraph.

    ``edges`` are (label, endpoint, endpoint) triples in canonical order.
    Parallel edges are allowed and a loop (equal endpoints) is a
    one-element circuit.  A set of edges is independent iff it contains no
    cycle, which the oracle decides with union-find.
    """
    edges = tuple((str(lab), str(u), str(v)) for lab, u, v in edges)
    ground = GroundSet(lab for lab, _, _ in edges)
    vertices: dict[str, int] = {}
    for _, u, v in edges:
        for w in (u, v):
            if w not in vertices:
                vertices[w] = len(vertices)
    ends = tuple((vertices[u], vertices[v]) for _, u, v in edges)
    nv = len(vertices)

    def oracle(mask: int) -> bool:
        parent = list(range(nv))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in _bit_indices(mask):
            u, v = ends[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def fast_circuits() -> list[int]:
        return _graph_cycle_masks(ends, len(edges))

    return Matroid(
        ground,
        oracle,
        rep="graphic",
        rep_data={"edges": edges, "fast_circuits": fast_circuits},
    )


def _graph_cycle_masks(ends: tuple[tuple[int, int], ...], m: int) -> list[int]:
    """Edge masks of all simple cycles of a multigraph.

    Each cycle is found exactly once, keyed by its lowest edge index: for
    edge e = (u, v) we enumerate simple paths from v back to u that use
    only higher-indexed edges.
    """
    adjacency: dict[int, list[tuple[int, int]]] = {}
    for i, (u, v) in enumerate(ends):
        adjacency.setdefault(u, []).append((v, i))
        if u != v:
            adjacency.setdefault(v, []).append((u, i))
    cycles: list[int] = []
    for i, (u, v) in enumerate(ends):
        if u == v:
            cycles.append(1 << i)
            continue
        # paths v -> u through edges with index > i, vertices not revisited;
        # visited masks use vertex ids as bit positions
        stack = [(v, 1 << i, (1 << u) | (1 << v))]
        while stack:
            at, used_edges, seen = stack.pop()
            for nxt, j in adjacency.get(at, ()):
                if j <= i or used_edges >> j & 1:
                    continue
                if nxt == u:
                    cycles.append(used_edges | 1 << j)
                    continue
                if seen >> nxt & 1:
                    continue
                stack.append((nxt, used_edges | 1 << j, seen | 1 << nxt))
    return cycles


def gf2_matroid(labels: Iterable[str], rows: Iterable[Iterable[int]]) -> Matroid:
    """Binary linear matroid of a 0/1 matrix, columns in element order.

    A set of columns is independent iff they are linearly independent over
    the two-element field; the oracle runs incremental elimination on
    columns packed into integers.
    """
    ground = labels if isinstance(labels, GroundSet) else GroundSet(labels)
    matrix = [list(row) for row in rows]
    for row in matrix:
        if len(row) != len(ground):
            raise DomainError("matrix rows must have one entry per element")
        if any(x not in (0, 1) for x in row):
            raise DomainError("matrix entries must be 0 or 1")
    columns = []
    for j in range(len(ground)):
        col = 0
        for i, row in enumerate(matrix):
            if row[j]:
                col |= 1 << i
        columns.append(col)

    def oracle(mask: int) -> bool:
        pivots: dict[int, int] = {}
        for i in _bit_indices(mask):
            v = columns[i]
            while v:
                h = v.bit_length()
                p = pivots.get(h)
                if p is None:
                    pivots[h] = v
                    break
                v ^= p
            if not v:
                return False
        return True

    return Matroid(
        ground,
        oracle,
        rep="gf2",
        rep_data={"columns": tuple(columns), "matrix": tuple(map(tuple, matrix))},
    )


def explicit_matroid(
    labels: Iterable[str],
    independent: Iterable[Iterable[str]],
    check: bool = True,
) -> Matroid:
    """Matroid given by an explicit list of independent sets.

    With ``check=True`` (the default) the family is verified against the
    independence axioms first and a ``DomainError`` carrying the failed
    axiom report is raised for non-matroids.
    """
    ground = labels if isinstance(labels, GroundSet) else GroundSet(labels)
    family = frozenset(ground.set_of(s).mask for s in independent)
    if check:
        from .axioms import check_axioms

        report = check_axioms(ground, independent_masks=family)
        if not report.independence_ok:
            raise DomainError(f"family is not a matroid: {report.first_failure()}")
    return Matroid(
        ground,
        lambda mask: mask in family,
        rep="explicit",
        rep_data={"family": family},
    )

"""Explicit matroids behind a uniform rank / closure / circuit interface.

Subsets of the ground set are ints used as bitsets (see :mod:`rotunda.bitset`).
Every concrete class only has to supply ``_rank``; flats, circuits,
components and so on are derived from the rank oracle and memoized per
instance.  Memo tables only ever receive the value the oracle determines, so a
racing write stores the same thing twice and results never depend on cache
state.
"""
from __future__ import annotations

import itertools
import os
from collections.abc import Iterable, Iterator, Sequence
from contextlib import contextmanager
from dataclasses import dataclass

from .bitset import from_ids, ids, popcount
from .errors import ElementError, EnumerationBoundError, InvalidMatroidError

DEFAULT_ENUMERATION_BOUND = 16
MAX_ELEMENTS = 64

_bound = int(os.environ.get("ROTUNDA_MAX_ELEMENTS", DEFAULT_ENUMERATION_BOUND))


def enumeration_bound() -> int:
    return _bound


def set_enumeration_bound(n: int) -> None:
    global _bound
    _bound = int(n)


@contextmanager
def enumeration_limit(n: int):
    old = _bound
    set_enumeration_bound(n)
    try:
        yield
    finally:
        set_enumeration_bound(old)


def check_bound(M: Matroid, what: str) -> None:
    if M.size > _bound:
        raise EnumerationBoundError(
            f"{what}: {M.size} elements exceeds the enumeration bound {_bound}"
        )


@dataclass(frozen=True, order=True)
class Flat:
    """A closed set together with its rank.

    Ordering is (rank, bitset), which is the canonical order used for every
    sorted list of flats in the package.
    """

    rank: int
    bits: int

    def __contains__(self, element: int) -> bool:
        return bool(self.bits >> element & 1)

    def __len__(self) -> int:
        return popcount(self.bits)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(ids(self.bits))

    def issubset(self, other: Flat | int) -> bool:
        o = other.bits if isinstance(other, Flat) else other
        return self.bits & ~o == 0


class Matroid:
    """Base class.  Subclasses implement ``_rank(bits)``."""

    kind = "abstract"

    def __init__(self, labels: Iterable[str], name: str | None = None):
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise InvalidMatroidError(f"duplicate element labels in {labels}")
        if len(labels) > MAX_ELEMENTS:
            raise InvalidMatroidError(f"at most {MAX_ELEMENTS} elements are supported")
        self.labels = labels
        self.n = len(labels)
        self.ground = (1 << self.n) - 1
        self.name = name
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._ranks: dict[int, int] = {}
        self._closures: dict[int, int] = {}
        self._memo: dict = {}

    # -- element handling -------------------------------------------------

    @property
    def size(self) -> int:
        return popcount(self.ground)

    def element(self, item: int | str) -> int:
        if isinstance(item, str):
            try:
                i = self._index[item]
            except KeyError:
                raise ElementError(f"unknown element label {item!r}") from None
        elif isinstance(item, int) and not isinstance(item, bool):
            i = item
        else:
            raise ElementError(f"not an element: {item!r}")
        if not (0 <= i < self.n and self.ground >> i & 1):
            raise ElementError(f"element {item!r} is not in the ground set")
        return i

    def subset(self, X) -> int:
        """Normalise an int bitset, a :class:`Flat`, or an iterable of ids/labels."""
        if isinstance(X, Flat):
            X = X.bits
        if isinstance(X, int) and not isinstance(X, bool):
            if X < 0 or X & ~self.ground:
                raise ElementError(f"subset {X:#x} is not contained in the ground set")
            return X
        if isinstance(X, str):
            X = [X]
        out = 0
        for item in X:
            out |= 1 << self.element(item)
        return out

    def names(self, X) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in ids(self.subset(X)))

    def fmt(self, X) -> str:
        return "{" + ",".join(self.names(X)) + "}"

    def elements(self) -> list[int]:
        return ids(self.ground)

    # -- rank oracle --------------------------------------------------------

    def _rank(self, x: int) -> int:
        raise NotImplementedError

    def r(self, x: int) -> int:
        """Memoized rank of a bitset; no validation (internal hot path)."""
        v = self._ranks.get(x)
        if v is None:
            v = self._ranks[x] = self._rank(x)
        return v

    def rank(self, X=None) -> int:
        return self.r(self.ground if X is None else self.subset(X))

    @property
    def full_rank(self) -> int:
        return self.r(self.ground)

    def is_independent(self, X) -> bool:
        x = self.subset(X)
        return self.r(x) == popcount(x)

    def _closure(self, x: int) -> int:
        r = self.r(x)
        out = x
        rest = self.ground & ~x
        while rest:
            low = rest & -rest
            rest ^= low
            if self.r(x | low) == r:
                out |= low
        return out

    def cl(self, x: int) -> int:
        v = self._closures.get(x)
        if v is None:
            v = self._closures[x] = self._closure(x)
        return v

    def closure(self, X) -> int:
        return self.cl(self.subset(X))

    def is_flat(self, X) -> bool:
        x = self.subset(X)
        return self.cl(x) == x

    def flat(self, X) -> Flat:
        """Closure of ``X`` wrapped as a :class:`Flat`."""
        c = self.closure(X)
        return Flat(self.r(c), c)

    @property
    def loops(self) -> int:
        return self.cl(0)

    def basis(self, X=None) -> int:
        """Greedy basis of ``X`` (lowest ids first)."""
        x = self.ground if X is None else self.subset(X)
        b = 0
        for e in ids(x):
            if self.r(b | 1 << e) > popcount(b):
                b |= 1 << e
        return b

    # -- enumeration --------------------------------------------------------

    def _flat_bits(self) -> set[int]:
        bottom = self.cl(0)
        seen = {bottom}
        frontier = [bottom]
        while frontier:
            nxt = []
            for F in frontier:
                # covers of F partition the elements outside F
                rest = self.ground & ~F
                while rest:
                    G = self.cl(F | (rest & -rest))
                    rest &= ~G
                    if G not in seen:
                        seen.add(G)
                        nxt.append(G)
            frontier = nxt
        return seen

    def flats(self, k: int | None = None) -> list[Flat]:
        """All flats in canonical order, optionally only those of rank ``k``."""
        fl = self._memo.get("flats")
        if fl is None:
            check_bound(self, "flats")
            bits = self._flat_bits()
            fl = sorted(Flat(self.r(b), b) for b in bits)
            self._memo["flats"] = fl
            self._memo["flat_set"] = frozenset(bits)
        return fl if k is None else [F for F in fl if F.rank == k]

    def flats_by_rank(self) -> list[list[Flat]]:
        by = self._memo.get("flats_by_rank")
        if by is None:
            by = [[] for _ in range(self.full_rank + 1)]
            for F in self.flats():
                by[F.rank].append(F)
            self._memo["flats_by_rank"] = by
        return by

    def hyperplanes(self) -> list[Flat]:
        r = self.full_rank
        return self.flats_by_rank()[r - 1] if r > 0 else []

    def circuits(self) -> list[int]:
        """All circuits, sorted by bitset value."""
        out = self._memo.get("circuits")
        if out is None:
            check_bound(self, "circuits")
            out = []
            elems = self.elements()
            for k in range(1, self.full_rank + 2):
                for combo in itertools.combinations(elems, k):
                    x = from_ids(combo)
                    if self.r(x) != k - 1:
                        continue
                    if all(self.r(x & ~(1 << e)) == k - 1 for e in combo):
                        out.append(x)
            out.sort()
            self._memo["circuits"] = out
        return out

    def is_circuit(self, X) -> bool:
        x = self.subset(X)
        k = popcount(x)
        if k == 0 or self.r(x) != k - 1:
            return False
        return all(self.r(x & ~(1 << e)) == k - 1 for e in ids(x))

    def cocircuits(self) -> list[int]:
        check_bound(self, "cocircuits")
        return sorted(self.ground & ~H.bits for H in self.hyperplanes())

    def components(self) -> list[int]:
        """Connected components (circuit-connectivity classes), by lowest element.

        Uses fundamental circuits with respect to one basis, which generate the
        same connectivity relation as the full circuit set.
        """
        comps = self._memo.get("components")
        if comps is None:
            elems = self.elements()
            parent = {e: e for e in elems}

            def find(a: int) -> int:
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            B = self.basis()
            rB = popcount(B)
            for f in ids(self.ground & ~B):
                if self.r(1 << f) == 0:
                    continue
                for b in ids(B):
                    if self.r((B & ~(1 << b)) | 1 << f) == rB:
                        parent[find(b)] = find(f)
            classes: dict[int, int] = {}
            for e in elems:
                root = find(e)
                classes[root] = classes.get(root, 0) | 1 << e
            comps = sorted(classes.values(), key=lambda c: c & -c)
            self._memo["components"] = comps
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- derived matroids ---------------------------------------------------

    def restrict(self, X) -> Matroid:
        x = self.subset(X)
        if x == self.ground:
            return self
        return Restriction(self, x)

    def component_matroids(self) -> list[Matroid]:
        return [self.restrict(c) for c in self.components()]

    # -- identity / serialisation ---------------------------------------------

    def to_dict(self) -> dict:
        raise NotImplementedError

    def _with_meta(self, d: dict, default_labels: Sequence[str] | None = None) -> dict:
        if default_labels is None or tuple(default_labels) != self.labels:
            d["elements"] = list(self.labels)
        if self.name is not None:
            d["name"] = self.name
        return d

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash((self.kind, self.labels))

    def __repr__(self) -> str:
        nm = f" {self.name!r}" if self.name else ""
        return f"<{type(self).__name__}{nm} n={self.size} r={self.full_rank}>"


def _default_labels(n: int) -> list[str]:
    return [str(i) for i in range(n)]


class UniformMatroid(Matroid):
    kind = "uniform"

    def __init__(self, rank: int, size: int, labels: Iterable[str] | None = None,
                 name: str | None = None):
        if not (0 <= rank <= size):
            raise InvalidMatroidError(f"uniform matroid needs 0 <= r <= n, got r={rank} n={size}")
        labels = list(labels) if labels is not None else _default_labels(size)
        if len(labels) != size:
            raise InvalidMatroidError("label count does not match size")
        super().__init__(labels, name)
        self.k = rank

    def _rank(self, x: int) -> int:
        return min(popcount(x), self.k)

    def to_dict(self) -> dict:
        d = {"type": "uniform", "rank": self.k, "size": self.n}
        return self._with_meta(d, _default_labels(self.n))


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph.  Parallel edges and self-loops are allowed."""

    kind = "graphic"

    def __init__(self, edges: Iterable[Sequence], vertices: Iterable | None = None,
                 labels: Iterable[str] | None = None, name: str | None = None):
        edges = [(str(u), str(v)) for u, v in edges]
        verts: list[str] = [str(v) for v in vertices] if vertices is not None else []
        seen = set(verts)
        for u, v in edges:
            for w in (u, v):
                if w not in seen:
                    seen.add(w)
                    verts.append(w)
        self.vertices = tuple(verts)
        vindex = {v: i for i, v in enumerate(verts)}
        self.ends = tuple((vindex[u], vindex[v]) for u, v in edges)
        self._explicit_vertices = vertices is not None
        default = _edge_labels(edges)
        labels = list(labels) if labels is not None else default
        if len(labels) != len(edges):
            raise InvalidMatroidError("label count does not match edge count")
        super().__init__(labels, name)
        self._edges = edges
        self._default = default

    def _components(self, x: int) -> list[int]:
        parent = list(range(len(self.vertices)))
        for e in ids(x):
            u, v = self.ends[e]
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            if u != v:
                parent[u] = v
        return parent

    def _rank(self, x: int) -> int:
        parent = list(range(len(self.vertices)))
        r = 0
        for e in ids(x):
            u, v = self.ends[e]
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            if u != v:
                parent[u] = v
                r += 1
        return r

    def _closure(self, x: int) -> int:
        parent = self._components(x)

        def find(a: int) -> int:
            while parent[a] != a:
                a = parent[a]
            return a

        out = x
        for e in ids(self.ground & ~x):
            u, v = self.ends[e]
            if find(u) == find(v):
                out |= 1 << e
        return out

    @property
    def edge_list(self) -> list[tuple[str, str]]:
        return list(self._edges)

    def to_dict(self) -> dict:
        d: dict = {"type": "graphic", "edges": [list(e) for e in self._edges]}
        used = {w for e in self._edges for w in e}
        if self._explicit_vertices or any(v not in used for v in self.vertices):
            d["vertices"] = list(self.vertices)
        return self._with_meta(d, self._default)


def _edge_labels(edges: list[tuple[str, str]]) -> list[str]:
    short = all(len(u) == 1 and len(v) == 1 for u, v in edges)
    out: list[str] = []
    counts: dict[str, int] = {}
    for u, v in edges:
        base = f"{u}{v}" if short else f"{u}-{v}"
        counts[base] = counts.get(base, 0) + 1
        out.append(base if counts[base] == 1 else f"{base}#{counts[base]}")
    return out


FIELDS = (2, 3, 5, 7)


def rank_mod_p(vectors: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) of the given vectors (Gaussian elimination)."""
    rows = [[a % p for a in v] for v in vectors]
    if not rows:
        return 0
    rank = 0
    for c in range(len(rows[0])):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        prow = [(a * inv) % p for a in rows[rank]]
        rows[rank] = prow
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


class LinearMatroid(Matroid):
    """Column matroid of a matrix over GF(p), p in {2, 3, 5, 7}."""

    kind = "linear"

    def __init__(self, matrix: Sequence[Sequence[int]], field: int = 2,
                 labels: Iterable[str] | None = None, name: str | None = None):
        if field not in FIELDS:
            raise InvalidMatroidError(f"field must be one of {FIELDS}, got {field}")
        matrix = [[int(a) % field for a in row] for row in matrix]
        ncols = len(matrix[0]) if matrix else 0
        if any(len(row) != ncols for row in matrix):
            raise InvalidMatroidError("matrix rows have different lengths")
        labels = list(labels) if labels is not None else _default_labels(ncols)
        if len(labels) != ncols:
            raise InvalidMatroidError("label count does not match column count")
        super().__init__(labels, name)
        self.p = field
        self.matrix = matrix
        self.columns = [tuple(row[j] for row in matrix) for j in range(ncols)]

    def _rank(self, x: int) -> int:
        return rank_mod_p([self.columns[j] for j in ids(x)], self.p)

    def to_dict(self) -> dict:
        d = {"type": "linear", "field": self.p, "matrix": [list(r) for r in self.matrix]}
        return self._with_meta(d, _default_labels(self.n))


def _label_sets(raw: Iterable[Iterable], labels: Sequence[str] | None):
    raw = [list(s) for s in raw]
    if labels is None:
        labels = []
        for s in raw:
            for x in s:
                if str(x) not in labels:
                    labels.append(str(x))
    index = {lab: i for i, lab in enumerate(labels)}
    sets = []
    for s in raw:
        try:
            sets.append(from_ids(index[str(x)] if not isinstance(x, int) else x for x in s))
        except KeyError as exc:
            raise ElementError(f"unknown element label {exc.args[0]!r}") from None
    return list(labels), sets


class CircuitMatroid(Matroid):
    """Matroid given by its circuit list, validated against the circuit axioms."""

    kind = "circuits"

    def __init__(self, circuits: Iterable[Iterable], elements: Sequence[str] | None = None,
                 name: str | None = None, validate: bool = True):
        labels, sets = _label_sets(circuits, elements)
        super().__init__(labels, name)
        self.circuit_sets = tuple(sorted(set(sets)))
        if validate:
            _validate_circuits(self.circuit_sets, labels)

    def _independent(self, x: int) -> bool:
        return all(c & ~x for c in self.circuit_sets)

    def _rank(self, x: int) -> int:
        ind = 0
        for e in ids(x):
            y = ind | 1 << e
            if self._independent(y):
                ind = y
        return popcount(ind)

    def to_dict(self) -> dict:
        d = {"type": "circuits", "elements": list(self.labels),
             "circuits": [[self.labels[i] for i in ids(c)] for c in self.circuit_sets]}
        if self.name is not None:
            d["name"] = self.name
        return d


def _validate_circuits(circuits: Sequence[int], labels: Sequence[str]) -> None:
    def show(c: int) -> str:
        return "{" + ",".join(labels[i] for i in ids(c)) + "}"

    for c in circuits:
        if c == 0:
            raise InvalidMatroidError("the empty set cannot be a circuit")
    for c1, c2 in itertools.permutations(circuits, 2):
        if c1 & ~c2 == 0:
            raise InvalidMatroidError(f"circuit {show(c1)} is contained in {show(c2)}")
    for c1, c2 in itertools.combinations(circuits, 2):
        common = c1 & c2
        for e in ids(common):
            rest = (c1 | c2) & ~(1 << e)
            if not any(c & ~rest == 0 for c in circuits):
                raise InvalidMatroidError(
                    f"circuit elimination fails for {show(c1)}, {show(c2)} at {labels[e]}"
                )


class BasisMatroid(Matroid):
    """Matroid given by its bases, validated against the exchange axiom."""

    kind = "bases"

    def __init__(self, bases: Iterable[Iterable], elements: Sequence[str] | None = None,
                 name: str | None = None, validate: bool = True):
        labels, sets = _label_sets(bases, elements)
        super().__init__(labels, name)
        self.basis_sets = tuple(sorted(set(sets)))
        if validate:
            _validate_bases(self.basis_sets, labels)

    def _rank(self, x: int) -> int:
        return max(popcount(x & b) for b in self.basis_sets)

    def to_dict(self) -> dict:
        d = {"type": "bases", "elements": list(self.labels),
             "bases": [[self.labels[i] for i in ids(b)] for b in self.basis_sets]}
        if self.name is not None:
            d["name"] = self.name
        return d


def _validate_bases(bases: Sequence[int], labels: Sequence[str]) -> None:
    if not bases:
        raise InvalidMatroidError("a matroid needs at least one basis")
    sizes = {popcount(b) for b in bases}
    if len(sizes) != 1:
        raise InvalidMatroidError(f"bases have different sizes {sorted(sizes)}")
    bset = set(bases)
    for b1, b2 in itertools.permutations(bases, 2):
        for x in ids(b1 & ~b2):
            if not any(((b1 & ~(1 << x)) | 1 << y) in bset for y in ids(b2 & ~b1)):
                raise InvalidMatroidError(
                    f"basis exchange fails for element {labels[x]}"
                )


class DirectSum(Matroid):
    kind = "direct_sum"

    def __init__(self, parts: Sequence[Matroid], name: str | None = None):
        parts = list(parts)
        all_labels = [lab for p in parts for lab in (p.labels[i] for i in p.elements())]
        if len(set(all_labels)) != len(all_labels):
            all_labels = [f"{k}.{p.labels[i]}" for k, p in enumerate(parts) for i in p.elements()]
        super().__init__(all_labels, name)
        self.parts = parts
        self._maps = []
        offset = 0
        for p in parts:
            pids = p.elements()
            self._maps.append((offset, pids, p.ground == (1 << len(pids)) - 1))
            offset += len(pids)

    def part_grounds(self) -> list[int]:
        out = []
        for off, pids, _ in self._maps:
            out.append(((1 << len(pids)) - 1) << off)
        return out

    def _rank(self, x: int) -> int:
        total = 0
        for p, (off, pids, contiguous) in zip(self.parts, self._maps):
            chunk = (x >> off) & ((1 << len(pids)) - 1)
            if not contiguous:
                chunk = from_ids(pids[k] for k in ids(chunk))
            total += p.r(chunk)
        return total

    def to_dict(self) -> dict:
        d = {"type": "direct_sum", "parts": [p.to_dict() for p in self.parts]}
        if self.name is not None:
            d["name"] = self.name
        return d


class Restriction(Matroid):
    """The view ``M|X``: same element ids and labels, rank taken from the parent."""

    kind = "restriction"

    def __init__(self, parent: Matroid, x: int):
        while isinstance(parent, Restriction):
            parent = parent.parent
        self.parent = parent
        self.labels = parent.labels
        self.n = parent.n
        self.ground = x & parent.ground
        pname = parent.name or parent.kind
        self.name = f"{pname}|{self._fmt_ground()}"
        self._index = parent._index
        self._ranks = parent._ranks  # rank of S within X is rank in the parent
        self._closures = {}
        self._memo = {}

    def _fmt_ground(self) -> str:
        return "{" + ",".join(self.labels[i] for i in ids(self.ground)) + "}"

    def _rank(self, x: int) -> int:
        return self.parent._rank(x)

    def _closure(self, x: int) -> int:
        return self.parent.cl(x) & self.ground

    def _flat_bits(self) -> set[int]:
        parent_flats = self.parent._memo.get("flat_set")
        if parent_flats is not None and self.ground in parent_flats:
            # flats of M|F for a flat F are the flats of M inside F
            g = self.ground
            return {b for b in parent_flats if b & ~g == 0}
        return super()._flat_bits()

    def restrict(self, X) -> Matroid:
        x = self.subset(X)
        if x == self.ground:
            return self
        return Restriction(self.parent, x)

    def standalone(self) -> CircuitMatroid:
        """Re-index to a matroid on 0..k-1 with the same labels, via its circuits."""
        keep = self.elements()
        labels = [self.labels[i] for i in keep]
        circs = [[self.labels[i] for i in ids(c)] for c in self.circuits()]
        return CircuitMatroid(circs, elements=labels, name=self.name, validate=False)

    def to_dict(self) -> dict:
        return self.standalone().to_dict()


def rank_axiom_violation(M: Matroid, *, all_pairs: bool = False) -> str | None:
    """Exhaustively check normalisation, unit increase, monotonicity, submodularity.

    Submodularity is checked in its local form r(X+e) + r(X+f) >= r(X+e+f) + r(X),
    which is equivalent given unit increase; ``all_pairs`` checks every pair
    of subsets instead.  Returns a description of the first violation, or ``None``.
    """
    check_bound(M, "rank axioms")
    subsets = list(_all_subsets(M.ground))
    if M.r(0) != 0:
        return "r(empty) != 0"
    for x in subsets:
        rx = M.r(x)
        for e in ids(M.ground & ~x):
            ry = M.r(x | 1 << e)
            if ry not in (rx, rx + 1):
                return f"unit increase fails at {M.fmt(x)} + {M.labels[e]}"
    if all_pairs:
        for x, y in itertools.combinations(subsets, 2):
            if M.r(x) + M.r(y) < M.r(x | y) + M.r(x & y):
                return f"submodularity fails for {M.fmt(x)}, {M.fmt(y)}"
        return None
    for x in subsets:
        rx = M.r(x)
        for e, f in itertools.combinations(ids(M.ground & ~x), 2):
            xe, xf = x | 1 << e, x | 1 << f
            if M.r(xe) + M.r(xf) < M.r(xe | xf) + rx:
                return f"submodularity fails for {M.fmt(xe)}, {M.fmt(xf)}"
    return None


def _all_subsets(mask: int) -> Iterator[int]:
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


# Functional spellings of the core operations.

def rank(M: Matroid, X=None) -> int:
    return M.rank(X)


def closure(M: Matroid, X) -> int:
    return M.closure(X)


def circuits(M: Matroid) -> list[int]:
    return M.circuits()


def flats(M: Matroid, k: int | None = None) -> list[Flat]:
    return M.flats(k)


def cocircuits(M: Matroid) -> list[int]:
    return M.cocircuits()


def connected_components(M: Matroid) -> list[int]:
    return M.components()

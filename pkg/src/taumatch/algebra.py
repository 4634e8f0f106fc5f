"""Bound quiver algebras: quivers, admissible relations, and path bases.

Conventions
-----------
Vertices are numbered 1..n.  A path stores its arrows in application order:
``("a", "b")`` means "first traverse a, then b".  Relation inputs use the same
order.  (When relations are written as composed functions g.f, the composed
string "gf" corresponds to the application-order list ``["f", "g"]``.)

The quotient by the relation ideal is computed degree by degree with plain
linear algebra over Q: consequences of the relations (relations pre- and
post-composed with paths) are accumulated in an echelon span until some degree
is proven to vanish entirely, which certifies finite dimensionality and caps
the nilpotency degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .linalg import scalar


class AlgebraError(Exception):
    pass


class NotFiniteDimensionalError(AlgebraError):
    """Raised when no vanishing degree is found below the configured cutoffs."""


class MalformedRelationError(AlgebraError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


class Quiver:
    """A finite quiver.  Loops and parallel arrows are allowed."""

    def __init__(self, vertex_count: int, arrows: Sequence[tuple[str, int, int] | Arrow]):
        if vertex_count <= 0:
            raise ValueError("vertex count must be positive")
        self.n = vertex_count
        self.arrows: list[Arrow] = []
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(*a)
            if not (1 <= a.source <= self.n and 1 <= a.target <= self.n):
                raise ValueError(f"arrow {a.name}: endpoints outside 1..{self.n}")
            self.arrows.append(a)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        self._by_name = {a.name: a for a in self.arrows}

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown arrow {name!r}") from None

    def arrows_from(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_into(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def opposite(self) -> "Quiver":
        return Quiver(self.n, [Arrow(a.name, a.target, a.source) for a in self.arrows])

    def __eq__(self, other) -> bool:
        return isinstance(other, Quiver) and self.n == other.n and self.arrows == other.arrows

    def __repr__(self) -> str:
        arrows = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({self.n}; {arrows})"


class Path(NamedTuple):
    """A path of the quiver, arrows listed in application order."""

    source: int
    arrows: tuple[str, ...]
    target: int

    @property
    def length(self) -> int:
        return len(self.arrows)


def _path_key(p: Path) -> tuple:
    return (len(p.arrows), p.source, p.arrows)


@dataclass
class Relation:
    """A K-linear combination of parallel paths that is set to zero.

    Every term must share the same source and target, and have length >= 2.
    """

    terms: list[tuple[Fraction, tuple[str, ...]]]

    @classmethod
    def monomial(cls, arrows: Sequence[str]) -> "Relation":
        return cls([(Fraction(1), tuple(arrows))])

    def reversed(self) -> "Relation":
        return Relation([(c, tuple(reversed(p))) for c, p in self.terms])


def make_path(quiver: Quiver, source: int, arrows: Sequence[str]) -> Path:
    """Validate composability and build a Path."""
    at = source
    for name in arrows:
        a = quiver.arrow(name)
        if a.source != at:
            raise ValueError(f"arrow {name!r} does not start at vertex {at}")
        at = a.target
    return Path(source, tuple(arrows), at)


class _PathSpan:
    """Echelonized span of path vectors, rows kept fully reduced.

    A vector is a dict {Path: Fraction}.  The pivot of a row is its largest
    path under the (length, source, arrows) order, so surviving quotient basis
    paths skew short.
    """

    def __init__(self):
        self.rows: dict[Path, dict[Path, Fraction]] = {}

    def reduce(self, vec: dict[Path, Fraction]) -> dict[Path, Fraction]:
        vec = {p: c for p, c in vec.items() if c != 0}
        while True:
            hits = [p for p in vec if p in self.rows]
            if not hits:
                return vec
            p = max(hits, key=_path_key)
            coeff = vec[p]
            row = self.rows[p]
            for q, c in row.items():
                nc = vec.get(q, Fraction(0)) - coeff * c
                if nc == 0:
                    vec.pop(q, None)
                else:
                    vec[q] = nc
        # unreachable

    def add(self, vec: dict[Path, Fraction]) -> bool:
        res = self.reduce(vec)
        if not res:
            return False
        lead = max(res, key=_path_key)
        inv = Fraction(1) / res[lead]
        row = {p: c * inv for p, c in res.items()}
        # back-substitute into existing rows so they stay fully reduced
        for lp, other in list(self.rows.items()):
            if lead in other:
                co = other[lead]
                for q, c in row.items():
                    nc = other.get(q, Fraction(0)) - co * c
                    if nc == 0:
                        other.pop(q, None)
                    else:
                        other[q] = nc
        self.rows[lead] = row
        return True

    def contains(self, vec: dict[Path, Fraction]) -> bool:
        return not self.reduce(vec)


def _paths_by_degree(quiver: Quiver, up_to: int, max_total: int) -> list[list[Path]]:
    """All raw paths of length 0..up_to, grouped by length."""
    out = [[Path(v, (), v) for v in range(1, quiver.n + 1)]]
    total = quiver.n
    for d in range(1, up_to + 1):
        nxt = []
        for p in out[d - 1]:
            for a in quiver.arrows_from(p.target):
                nxt.append(Path(p.source, p.arrows + (a.name,), a.target))
        total += len(nxt)
        if total > max_total:
            raise NotFiniteDimensionalError(
                f"more than {max_total} paths generated by degree {d}; "
                "the relation ideal does not look admissible"
            )
        out.append(sorted(nxt, key=_path_key))
    return out


class BoundQuiverAlgebra:
    """The quotient of a path algebra by an admissible relation ideal.

    Built through :func:`build_algebra`; instances are immutable after
    construction and safe to share.
    """

    def __init__(self, quiver: Quiver, relations: list[Relation], basis: list[Path],
                 span: _PathSpan, nilpotency_degree: int):
        self.quiver = quiver
        self.relations = relations
        self.basis = sorted(basis, key=_path_key)
        self._span = span
        self.nilpotency_degree = nilpotency_degree
        self.dim = len(self.basis)
        self._pairs: dict[tuple[int, int], list[Path]] = {}
        for p in self.basis:
            self._pairs.setdefault((p.source, p.target), []).append(p)
        self._opposite: Optional[BoundQuiverAlgebra] = None

    @property
    def n(self) -> int:
        return self.quiver.n

    def path_basis(self, source: int, target: int) -> list[Path]:
        """Basis paths from ``source`` to ``target`` (residue classes)."""
        return list(self._pairs.get((source, target), ()))

    def paths_from(self, source: int) -> list[Path]:
        return [p for p in self.basis if p.source == source]

    def paths_into(self, target: int) -> list[Path]:
        return [p for p in self.basis if p.target == target]

    def reduce_path(self, p: Path) -> dict[Path, Fraction]:
        """Normal form of a raw path as a combination of basis paths."""
        if p.length >= self.nilpotency_degree:
            return {}
        return self._span.reduce({p: Fraction(1)})

    def concat(self, u: Path, v: Path) -> dict[Path, Fraction]:
        """Normal form of "first u, then v"."""
        if u.target != v.source:
            raise ValueError("paths are not composable")
        return self.reduce_path(Path(u.source, u.arrows + v.arrows, v.target))

    def opposite(self) -> "BoundQuiverAlgebra":
        """The opposite algebra: arrows and relation paths reversed."""
        if self._opposite is None:
            self._opposite = build_algebra(
                self.quiver.opposite(), [r.reversed() for r in self.relations],
                max_path_length=max(64, self.nilpotency_degree),
            )
        return self._opposite

    def __repr__(self) -> str:
        return f"BoundQuiverAlgebra(dim={self.dim}, n={self.n}, nilpotency={self.nilpotency_degree})"


def _check_relation(quiver: Quiver, rel: Relation) -> Relation:
    terms = [(scalar(c), tuple(p)) for c, p in rel.terms if scalar(c) != 0]
    if not terms:
        raise MalformedRelationError("relation has no nonzero term")
    ends = set()
    for _, arrows in terms:
        if len(arrows) < 2:
            raise MalformedRelationError("relation paths must have length >= 2")
        p = make_path(quiver, quiver.arrow(arrows[0]).source, arrows)
        ends.add((p.source, p.target))
    if len(ends) > 1:
        raise MalformedRelationError("relation mixes paths with different endpoints")
    return Relation(terms)


def _relation_endpoints(quiver: Quiver, rel: Relation) -> tuple[int, int]:
    arrows = rel.terms[0][1]
    p = make_path(quiver, quiver.arrow(arrows[0]).source, arrows)
    return p.source, p.target


def build_algebra(quiver: Quiver, relations: Iterable[Relation],
                  max_path_length: int = 64,
                  max_total_paths: int = 50_000) -> BoundQuiverAlgebra:
    """Construct the bound quiver algebra KQ/I over Q.

    Consequence vectors p*r*q are accumulated degree by degree; the first
    degree at which every path lies in their span certifies that the quotient
    is finite dimensional.  The basis and nilpotency degree are then read off
    the exact intersection of the ideal with the short-path window.

    Raises :class:`NotFiniteDimensionalError` when no such degree exists below
    ``max_path_length`` (or the path count guard trips), and
    :class:`MalformedRelationError` for mixed-endpoint terms or length-1 paths.
    """
    rels = [_check_relation(quiver, r) for r in relations]
    rel_ends = [_relation_endpoints(quiver, r) for r in rels]
    rel_min = [min(len(p) for _, p in r.terms) for r in rels]
    rel_max = [max(len(p) for _, p in r.terms) for r in rels]

    paths = _paths_by_degree(quiver, 0, max_total_paths)

    def extend_paths(up_to: int):
        nonlocal paths
        if len(paths) <= up_to:
            paths = _paths_by_degree(quiver, up_to, max_total_paths)

    def products(degree_of_longest_term: int, k: int, truncate_at: Optional[int]):
        """Vectors p*r_k*q; ``degree_of_longest_term`` fixes len(p)+max+len(q)."""
        src, tgt = rel_ends[k]
        span_len = rel_max[k] if truncate_at is None else rel_min[k]
        budget = degree_of_longest_term - span_len
        if budget < 0:
            return
        extend_paths(budget)
        for lp in range(budget + 1):
            lq = budget - lp
            for p in paths[lp]:
                if p.target != src:
                    continue
                for q in paths[lq]:
                    if q.source != tgt:
                        continue
                    vec: dict[Path, Fraction] = {}
                    for c, mid in rels[k].terms:
                        full = p.arrows + mid + q.arrows
                        if truncate_at is not None and len(full) > truncate_at:
                            continue
                        key = Path(p.source, full, q.target)
                        vec[key] = vec.get(key, Fraction(0)) + c
                    if vec:
                        yield vec

    # Phase 1: grow the exact consequence span until some degree dies entirely.
    span = _PathSpan()
    certificate: Optional[int] = None
    for working in range(2, max_path_length + 1):
        extend_paths(working)
        for k in range(len(rels)):
            for vec in products(working, k, truncate_at=None):
                span.add(vec)
        for d in range(2, working + 1):
            if all(span.contains({p: Fraction(1)}) for p in paths[d]):
                certificate = d
                break
        if certificate is not None:
            break
    if certificate is None:
        raise NotFiniteDimensionalError(
            f"paths survive beyond length {max_path_length}; not finite dimensional "
            "(raise max_path_length if the ideal is admissible with deep relations)"
        )

    # Phase 2: with R^certificate inside the ideal, the truncated consequence
    # span is exactly the ideal's intersection with paths of length < certificate.
    espan = _PathSpan()
    window = certificate - 1
    for k in range(len(rels)):
        for longest in range(rel_min[k], window + 1):
            for vec in products(longest, k, truncate_at=window):
                espan.add(vec)

    nilpotency = certificate
    for m in range(2, certificate):
        if all(espan.contains({p: Fraction(1)}) for p in paths[m]):
            nilpotency = m
            break

    leads = set(espan.rows)
    basis = [p for d in range(nilpotency) for p in paths[d] if p not in leads]
    return BoundQuiverAlgebra(quiver, rels, basis, espan, nilpotency)

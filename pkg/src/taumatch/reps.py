"""Representations of a bound quiver and their homological bookkeeping.

A representation assigns a Q-vector space to every vertex and an exact matrix
to every arrow; an arrow a: i -> j acts as a linear map from the space at i to
the space at j, and a path acts by applying its arrows in application order.
Constructors validate shapes and relations, so every value in circulation
satisfies the algebra's relations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg as la
from .algebra import BoundQuiverAlgebra, Path
from .linalg import Mat


class RepresentationError(Exception):
    pass


class Representation:
    """A finite-dimensional left module, given by vertex spaces and arrow maps.

    ``dims[v-1]`` is the dimension at vertex v; ``maps[name]`` has shape
    (target dim, source dim).  Missing arrows act as zero.  Instances are
    immutable after construction.
    """

    def __init__(self, alg: BoundQuiverAlgebra, dims: Sequence[int],
                 maps: Optional[dict[str, Mat]] = None, check: bool = True):
        self.alg = alg
        if len(dims) != alg.n:
            raise RepresentationError(f"expected {alg.n} dimensions, got {len(dims)}")
        if any(d < 0 for d in dims):
            raise RepresentationError("dimensions must be nonnegative")
        self.dims = tuple(int(d) for d in dims)
        self.maps: dict[str, Mat] = {}
        maps = maps or {}
        for a in alg.quiver.arrows:
            shape = (self.dim(a.target), self.dim(a.source))
            m = maps.get(a.name)
            if m is None:
                m = la.zeros(*shape)
            if m.shape != shape:
                raise RepresentationError(
                    f"map for arrow {a.name!r} has shape {m.shape}, expected {shape}")
            self.maps[a.name] = m
        for name in maps:
            alg.quiver.arrow(name)  # reject unknown arrow names
        if check:
            problems = validate(self)
            if problems:
                raise RepresentationError(problems[0])
        self._end_info = None
        self._tau = None

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.total_dim == 0

    def map(self, arrow_name: str) -> Mat:
        return self.maps[arrow_name]

    def path_action(self, p: Path) -> Mat:
        """The matrix of the path ``p`` acting on this representation."""
        out = la.eye(self.dim(p.source))
        for name in p.arrows:
            out = la.mul(self.map(name), out)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        if self.alg is not other.alg or self.dims != other.dims:
            return False
        return all(bool((self.maps[k] == other.maps[k]).all()) for k in self.maps)

    def __repr__(self) -> str:
        return f"Representation(dims={self.dims})"


def validate(m: Representation) -> list[str]:
    """Relation check; returns a list of violations (empty means ok)."""
    problems = []
    for idx, rel in enumerate(m.alg.relations):
        src, tgt = None, None
        total = None
        for c, arrows in rel.terms:
            p = Path(m.alg.quiver.arrow(arrows[0]).source, tuple(arrows),
                     m.alg.quiver.arrow(arrows[-1]).target)
            src, tgt = p.source, p.target
            term = c * m.path_action(p)
            total = term if total is None else total + term
        if total is not None and not la.is_zero_matrix(total):
            problems.append(
                f"relation {idx} evaluates to a nonzero matrix "
                f"{[list(map(str, row)) for row in total.tolist()]} on vertices {src}->{tgt}")
            break
    return problems


def zero_rep(alg: BoundQuiverAlgebra) -> Representation:
    return Representation(alg, [0] * alg.n, {}, check=False)


def direct_sum(alg: BoundQuiverAlgebra, reps: Sequence[Representation]) -> Representation:
    """Blockwise direct sum; the empty list gives the zero module."""
    for r in reps:
        if r.alg is not alg:
            raise RepresentationError("summands live over different algebras")
    dims = [sum(r.dim(v) for r in reps) for v in range(1, alg.n + 1)]
    maps = {}
    for a in alg.quiver.arrows:
        maps[a.name] = la.block_diag([r.map(a.name) for r in reps]) if reps \
            else la.zeros(dims[a.target - 1], dims[a.source - 1])
        # block_diag of no blocks is 0x0; fix the shape for the empty case
        if maps[a.name].shape != (dims[a.target - 1], dims[a.source - 1]):
            maps[a.name] = la.zeros(dims[a.target - 1], dims[a.source - 1])
    return Representation(alg, dims, maps, check=False)


# ---------------------------------------------------------------------------
# standard modules


def simple(alg: BoundQuiverAlgebra, i: int) -> Representation:
    """S(i): one-dimensional at vertex i, all arrows acting as zero."""
    dims = [1 if v == i else 0 for v in range(1, alg.n + 1)]
    return Representation(alg, dims, {}, check=False)


def projective(alg: BoundQuiverAlgebra, i: int) -> Representation:
    """P(i): the space at v is spanned by basis paths i -> v, arrows append."""
    bases = {v: alg.path_basis(i, v) for v in range(1, alg.n + 1)}
    dims = [len(bases[v]) for v in range(1, alg.n + 1)]
    maps = {}
    for a in alg.quiver.arrows:
        src, tgt = bases[a.source], bases[a.target]
        m = la.zeros(len(tgt), len(src))
        arrow_path = Path(a.source, (a.name,), a.target)
        index = {p: k for k, p in enumerate(tgt)}
        for col, p in enumerate(src):
            for q, c in alg.concat(p, arrow_path).items():
                m[index[q], col] = c
        maps[a.name] = m
    return Representation(alg, dims, maps)


def injective(alg: BoundQuiverAlgebra, i: int) -> Representation:
    """I(i): dual construction, the space at v is dual to basis paths v -> i."""
    bases = {v: alg.path_basis(v, i) for v in range(1, alg.n + 1)}
    dims = [len(bases[v]) for v in range(1, alg.n + 1)]
    maps = {}
    for a in alg.quiver.arrows:
        # prepend the arrow: basis paths (target -> i) -> paths (source -> i),
        # then dualize by transposing
        src, tgt = bases[a.source], bases[a.target]
        t = la.zeros(len(src), len(tgt))
        arrow_path = Path(a.source, (a.name,), a.target)
        index = {p: k for k, p in enumerate(src)}
        for col, q in enumerate(tgt):
            for w, c in alg.concat(arrow_path, q).items():
                t[index[w], col] = c
        maps[a.name] = t.T.copy()
    return Representation(alg, dims, maps)


def dual_rep(alg: BoundQuiverAlgebra, m: Representation) -> Representation:
    """Vector-space dual: a module over the opposite algebra, read back over ``alg``.

    Transposes every arrow matrix; an involution up to natural identification.
    """
    if m.alg.quiver != alg.quiver.opposite():
        raise RepresentationError("input is not a module over the opposite quiver")
    maps = {a.name: m.map(a.name).T.copy() for a in alg.quiver.arrows}
    return Representation(alg, m.dims, maps)


# ---------------------------------------------------------------------------
# morphisms and Hom spaces


class Morphism:
    """A module morphism, one matrix per vertex (target dim x source dim)."""

    def __init__(self, source: Representation, target: Representation,
                 blocks: Sequence[Mat], check: bool = True):
        self.source = source
        self.target = target
        self.blocks = list(blocks)
        if len(self.blocks) != source.alg.n:
            raise RepresentationError("one block per vertex required")
        for v in range(1, source.alg.n + 1):
            want = (target.dim(v), source.dim(v))
            if self.blocks[v - 1].shape != want:
                raise RepresentationError(f"block at vertex {v} has wrong shape")
        if check and not self._commutes():
            raise RepresentationError("blocks do not commute with the arrow actions")

    def _commutes(self) -> bool:
        for a in self.source.alg.quiver.arrows:
            lhs = la.mul(self.blocks[a.target - 1], self.source.map(a.name))
            rhs = la.mul(self.target.map(a.name), self.blocks[a.source - 1])
            if not la.is_zero_matrix(lhs - rhs):
                return False
        return True

    def block(self, v: int) -> Mat:
        return self.blocks[v - 1]

    def then(self, other: "Morphism") -> "Morphism":
        """Composite "self followed by other"."""
        if other.source != self.target:
            raise RepresentationError("morphisms are not composable")
        blocks = [la.mul(other.blocks[k], self.blocks[k]) for k in range(len(self.blocks))]
        return Morphism(self.source, other.target, blocks, check=False)

    @property
    def is_zero(self) -> bool:
        return all(la.is_zero_matrix(b) for b in self.blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and all(bool((a == b).all()) for a, b in zip(self.blocks, other.blocks)))

    def __repr__(self) -> str:
        return f"Morphism({self.source!r} -> {self.target!r})"


def identity_morphism(m: Representation) -> Morphism:
    return Morphism(m, m, [la.eye(d) for d in m.dims], check=False)


def zero_morphism(m: Representation, n: Representation) -> Morphism:
    return Morphism(m, n, [la.zeros(n.dim(v), m.dim(v)) for v in range(1, m.alg.n + 1)],
                    check=False)


def _vec(phi: Morphism) -> Mat:
    entries = []
    for b in phi.blocks:
        entries.extend(b.flat)
    return la.from_columns([entries]) if entries else la.zeros(0, 1)


def _lincomb(coeffs: Sequence[Fraction], morphisms: Sequence[Morphism]) -> Morphism:
    src, tgt = morphisms[0].source, morphisms[0].target
    blocks = [la.zeros(tgt.dim(v), src.dim(v)) for v in range(1, src.alg.n + 1)]
    for c, phi in zip(coeffs, morphisms):
        if c == 0:
            continue
        for k in range(len(blocks)):
            blocks[k] = blocks[k] + c * phi.blocks[k]
    return Morphism(src, tgt, blocks, check=False)


def hom_basis(m: Representation, n: Representation) -> list[Morphism]:
    """A basis of Hom(m, n), by solving the arrow-commutation linear system."""
    if m.alg is not n.alg:
        raise RepresentationError("modules live over different algebras")
    nverts = m.alg.n
    sizes = [n.dim(v) * m.dim(v) for v in range(1, nverts + 1)]
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    unknowns = offsets[-1]

    def var(v: int, i: int, j: int) -> int:
        # entry (i, j) of the block at vertex v, row-major
        return offsets[v - 1] + i * m.dim(v) + j

    rows = []
    for a in m.alg.quiver.arrows:
        s, t = a.source, a.target
        ma, na = m.map(a.name), n.map(a.name)
        for i in range(n.dim(t)):
            for j in range(m.dim(s)):
                row = [Fraction(0)] * unknowns
                for k in range(m.dim(t)):
                    row[var(t, i, k)] += ma[k, j]
                for l in range(n.dim(s)):
                    row[var(s, l, j)] -= na[i, l]
                rows.append(row)
    system = la.mat(rows, cols=unknowns) if rows else la.zeros(0, unknowns)
    kernel = la.kernel_basis(system)

    basis = []
    for col in range(kernel.shape[1]):
        blocks = []
        for v in range(1, nverts + 1):
            b = la.zeros(n.dim(v), m.dim(v))
            for i in range(n.dim(v)):
                for j in range(m.dim(v)):
                    b[i, j] = kernel[var(v, i, j), col]
            blocks.append(b)
        basis.append(Morphism(m, n, blocks, check=False))
    return basis


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_basis(m, n))


# ---------------------------------------------------------------------------
# endomorphism algebras and indecomposability


@dataclass
class EndAlgebraInfo:
    """Summary of End(M): dimension, radical, and a locality verdict.

    ``local`` is "yes", "no" or "undetermined"; "no" comes with an exhibited
    nontrivial idempotent, "undetermined" is only possible when End/rad has
    dimension > 1 and no split idempotent was found.
    """

    dimension: int
    radical_dimension: int
    local: str
    idempotent: Optional[Morphism] = None
    _basis: Optional[list[Morphism]] = None
    _coord_matrix: Optional[Mat] = None
    _radical_rows: Optional[Mat] = None


class _EndAlgebra:
    """Coordinate arithmetic in End(M) relative to a fixed basis."""

    def __init__(self, m: Representation):
        self.rep = m
        self.basis = hom_basis(m, m)
        self.dim = len(self.basis)
        self.coord_matrix = la.hstack([_vec(b) for b in self.basis]) if self.basis \
            else la.zeros(0, 0)
        self.structure = [[self.coords(self.compose(j, k)) for k in range(self.dim)]
                          for j in range(self.dim)]

    def compose(self, j: int, k: int) -> Morphism:
        # product x*y means "apply y, then x"
        return self.basis[k].then(self.basis[j])

    def coords(self, phi: Morphism) -> list[Fraction]:
        sol = la.solve(self.coord_matrix, _vec(phi))
        assert sol is not None, "endomorphism outside its own basis span"
        return [sol[i, 0] for i in range(self.dim)]

    def mult(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        for j, xj in enumerate(x):
            if xj == 0:
                continue
            for k, yk in enumerate(y):
                if yk == 0:
                    continue
                s = self.structure[j][k]
                for i in range(self.dim):
                    out[i] += xj * yk * s[i]
        return out

    def identity_coords(self) -> list[Fraction]:
        return self.coords(identity_morphism(self.rep))

    def morphism(self, x: Sequence[Fraction]) -> Morphism:
        return _lincomb(list(x), self.basis)

    def gram(self) -> Mat:
        # trace form of the regular representation: G[j,k] = tr(L_{b_j b_k})
        traces = []
        for i in range(self.dim):
            traces.append(sum(self.structure[i][k][k] for k in range(self.dim)))
        g = la.zeros(self.dim, self.dim)
        for j in range(self.dim):
            for k in range(self.dim):
                g[j, k] = sum(self.structure[j][k][i] * traces[i] for i in range(self.dim))
        return g


def _reduce_mod(rows: Mat, x: list[Fraction]) -> list[Fraction]:
    """Reduce a coordinate vector by a row-echelon basis (rows in RREF)."""
    x = list(x)
    for r in range(rows.shape[0]):
        pivot = next((c for c in range(rows.shape[1]) if rows[r, c] != 0), None)
        if pivot is None or x[pivot] == 0:
            continue
        coeff = x[pivot] / rows[r, pivot]
        for c in range(rows.shape[1]):
            x[c] -= coeff * rows[r, c]
    return x


def _minimal_polynomial(end: _EndAlgebra, rad_rows: Mat, x: list[Fraction]) -> list[Fraction]:
    """Monic minimal polynomial of x in End/rad; coefficients low to high."""
    one = end.identity_coords()
    powers = [_reduce_mod(rad_rows, one)]
    current = list(one)
    while True:
        current = _reduce_mod(rad_rows, end.mult(x, current))
        stacked = la.mat(powers + [current], cols=end.dim)
        if la.rank(stacked) < stacked.shape[0]:
            k = la.kernel_basis(stacked.T.copy())
            col = [k[i, 0] for i in range(k.shape[0])]
            top = col[-1]
            assert top != 0
            return [c / top for c in col[:-1]] + [Fraction(1)]
        powers.append(current)


def _poly_eval(end: _EndAlgebra, rad_rows: Mat, coeffs: Sequence[Fraction],
               x: list[Fraction]) -> list[Fraction]:
    one = end.identity_coords()
    out = [Fraction(0)] * end.dim
    for c in reversed(list(coeffs)):
        out = _reduce_mod(rad_rows, end.mult(x, out))
        for i in range(end.dim):
            out[i] += c * one[i]
    return _reduce_mod(rad_rows, out)


def _split_idempotent_coords(end: _EndAlgebra, rad_rows: Mat) -> Optional[list[Fraction]]:
    """Search End/rad for a nontrivial idempotent; None if none is found."""
    import sympy

    one = _reduce_mod(rad_rows, end.identity_coords())
    zero = [Fraction(0)] * end.dim

    def is_scalar(x):
        stacked = la.mat([one, x], cols=end.dim)
        return la.rank(stacked) <= 1

    def candidates():
        units = []
        for j in range(end.dim):
            e = [Fraction(0)] * end.dim
            e[j] = Fraction(1)
            units.append(_reduce_mod(rad_rows, e))
        yield from units
        for j in range(len(units)):
            for k in range(j + 1, len(units)):
                yield [a + b for a, b in zip(units[j], units[k])]
        rng = random.Random(20240)
        for _ in range(100):
            yield _reduce_mod(rad_rows, [Fraction(rng.randint(-3, 3)) for _ in range(end.dim)])

    lam = sympy.Symbol("t")
    for x in candidates():
        if all(c == 0 for c in x) or is_scalar(x):
            continue
        sq = _reduce_mod(rad_rows, end.mult(x, x))
        if sq == x:
            return x
        minpoly = _minimal_polynomial(end, rad_rows, x)
        poly = sympy.Poly([sympy.Rational(c) for c in reversed(minpoly)], lam, domain="QQ")
        factors = poly.factor_list()[1]
        if len(factors) < 2:
            continue
        g = factors[0][0] ** factors[0][1]
        h = poly.quo(g)
        u, _, gcd = sympy.gcdex(g.as_expr(), h.as_expr(), lam)
        if sympy.simplify(gcd - 1) != 0:
            continue
        e_poly = sympy.Poly(sympy.expand(u * g.as_expr()), lam, domain="QQ")
        e_poly = e_poly.rem(poly)
        coeffs = [Fraction(str(c)) for c in reversed(e_poly.all_coeffs())]
        e = _poly_eval(end, rad_rows, coeffs, x)
        if e != zero and e != one:
            return e
    return None


def _lift_idempotent(end: _EndAlgebra, e: list[Fraction]) -> Optional[list[Fraction]]:
    """Newton lifting e <- 3e^2 - 2e^3 modulo the nilpotent radical."""
    for _ in range(64):
        sq = end.mult(e, e)
        if sq == e:
            return e
        cube = end.mult(sq, e)
        e = [3 * a - 2 * b for a, b in zip(sq, cube)]
    return None


def end_info(m: Representation) -> EndAlgebraInfo:
    """Dimension, radical dimension (Dickson trace criterion) and locality of End(M)."""
    if m._end_info is not None:
        return m._end_info

    end = _EndAlgebra(m)
    if end.dim == 0:
        info = EndAlgebraInfo(0, 0, "no")
        m._end_info = info
        return info

    gram = end.gram()
    rad_cols = la.kernel_basis(gram.T.copy())
    rad_rows, _ = la.rref(rad_cols.T.copy())
    rad_dim = rad_cols.shape[1]

    if end.dim - rad_dim == 1:
        verdict, idem = "yes", None
    else:
        coords = _split_idempotent_coords(end, rad_rows)
        if coords is None:
            verdict, idem = "undetermined", None
        else:
            lifted = _lift_idempotent(end, coords)
            if lifted is None:
                verdict, idem = "undetermined", None
            else:
                phi = end.morphism(lifted)
                assert phi.then(phi) == phi
                assert not phi.is_zero and phi != identity_morphism(m)
                verdict, idem = "no", phi

    info = EndAlgebraInfo(end.dim, rad_dim, verdict, idem, end.basis,
                          end.coord_matrix, rad_rows)
    m._end_info = info
    return info


def is_indecomposable(m: Representation) -> str:
    """"yes", "no" or "undetermined"; raises on the zero module."""
    if m.is_zero:
        raise ValueError("zero module")
    return end_info(m).local


def iso_witness(m: Representation, n: Representation) -> Optional[Morphism]:
    """An isomorphism between certified indecomposables, or None.

    A composite M -> N -> M escaping the radical of End(M) is invertible
    because End(M) is local, so its first leg is a split mono between modules
    of the same dimension, hence an isomorphism.
    """
    if is_indecomposable(m) != "yes" or is_indecomposable(n) != "yes":
        raise ValueError("inputs not certified indecomposable")
    if m.dims != n.dims:
        return None
    info = end_info(m)
    forward = hom_basis(m, n)
    backward = hom_basis(n, m)
    coord_matrix, rad_rows = info._coord_matrix, info._radical_rows
    for phi in forward:
        for psi in backward:
            comp = phi.then(psi)
            sol = la.solve(coord_matrix, _vec(comp))
            assert sol is not None
            coords = [sol[i, 0] for i in range(info.dimension)]
            if any(c != 0 for c in _reduce_mod(rad_rows, coords)):
                return phi
    return None


def is_isomorphic(m: Representation, n: Representation) -> bool:
    """Isomorphism test for certified indecomposables."""
    return iso_witness(m, n) is not None


# ---------------------------------------------------------------------------
# radicals, tops, projective covers


def radical_submodule(m: Representation) -> tuple[Representation, Morphism]:
    """The radical (sum of images of all incoming arrows, loops included)."""
    alg = m.alg
    incl_blocks = []
    rdims = []
    for v in range(1, alg.n + 1):
        images = [m.map(a.name) for a in alg.quiver.arrows_into(v)]
        stacked = la.hstack(images) if images else la.zeros(m.dim(v), 0)
        basis = la.column_space_basis(stacked)
        incl_blocks.append(basis)
        rdims.append(basis.shape[1])
    maps = {}
    for a in alg.quiver.arrows:
        src_b = incl_blocks[a.source - 1]
        tgt_b = incl_blocks[a.target - 1]
        sol = la.solve(tgt_b, la.mul(m.map(a.name), src_b))
        assert sol is not None, "radical is not arrow-stable"
        maps[a.name] = sol
    rad = Representation(alg, rdims, maps, check=False)
    return rad, Morphism(rad, m, incl_blocks, check=False)


def top_multiplicities(m: Representation) -> tuple[int, ...]:
    rad, _ = radical_submodule(m)
    return tuple(m.dim(v) - rad.dim(v) for v in range(1, m.alg.n + 1))


def kernel_of_morphism(g: Morphism) -> tuple[Representation, Morphism]:
    """The kernel subrepresentation with its inclusion."""
    m = g.source
    alg = m.alg
    blocks = [la.kernel_basis(g.block(v)) for v in range(1, alg.n + 1)]
    dims = [b.shape[1] for b in blocks]
    maps = {}
    for a in alg.quiver.arrows:
        sol = la.solve(blocks[a.target - 1], la.mul(m.map(a.name), blocks[a.source - 1]))
        assert sol is not None, "kernel is not arrow-stable"
        maps[a.name] = sol
    ker = Representation(alg, dims, maps, check=False)
    return ker, Morphism(ker, m, blocks, check=False)


@dataclass
class CoverData:
    """A minimal projective cover P0 ->> M and its kernel."""

    p0: Representation
    cover: Morphism
    kernel: Representation
    kernel_inclusion: Morphism
    vertices: list[int]  # one entry per standard projective summand of p0


def projective_cover_map(m: Representation) -> CoverData:
    """Deterministic minimal projective cover.

    Generators lift the top: at each vertex, the first standard basis vectors
    completing the radical, in vertex order.  Surjectivity and minimality
    (kernel inside rad P0) are asserted.
    """
    alg = m.alg
    rad, rad_incl = radical_submodule(m)

    generators: list[tuple[int, Mat]] = []
    for v in range(1, alg.n + 1):
        cols = rad_incl.block(v)
        base_rank = la.rank(cols)
        for k in range(m.dim(v)):
            e = la.zeros(m.dim(v), 1)
            e[k, 0] = Fraction(1)
            trial = la.hstack([cols, e])
            if la.rank(trial) > base_rank:
                cols = trial
                base_rank += 1
                generators.append((v, e))

    vertices = [v for v, _ in generators]
    summands = [projective(alg, v) for v in vertices]
    p0 = direct_sum(alg, summands)

    blocks = []
    for w in range(1, alg.n + 1):
        cols = []
        for (v, gen), summand in zip(generators, summands):
            for p in alg.path_basis(v, w):
                cols.append(la.mul(m.path_action(p), gen))
        block = la.hstack(cols) if cols else la.zeros(m.dim(w), 0)
        assert block.shape == (m.dim(w), p0.dim(w))
        blocks.append(block)
    cover = Morphism(p0, m, blocks)
    for w in range(1, alg.n + 1):
        assert la.rank(cover.block(w)) == m.dim(w), "cover is not surjective"

    kernel, incl = kernel_of_morphism(cover)
    rad_p0, rad_p0_incl = radical_submodule(p0)
    for w in range(1, alg.n + 1):
        joint = la.hstack([rad_p0_incl.block(w), incl.block(w)])
        assert la.rank(joint) == la.rank(rad_p0_incl.block(w)), \
            "cover kernel escapes the radical"
    return CoverData(p0, cover, kernel, incl, vertices)


@dataclass
class PresentationData:
    """A minimal projective presentation P1 -> P0 ->> M."""

    p1: Representation
    p0: Representation
    map: Morphism
    p1_vertices: list[int]
    p0_vertices: list[int]


def minimal_projective_presentation(m: Representation) -> PresentationData:
    cover0 = projective_cover_map(m)
    cover1 = projective_cover_map(cover0.kernel)
    f = cover1.cover.then(cover0.kernel_inclusion)
    assert f.then(cover0.cover).is_zero, "presentation does not compose to zero"
    return PresentationData(cover1.p0, cover0.p0, f, cover1.vertices, cover0.vertices)

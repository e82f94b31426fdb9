"""Ext-algebras of the trivial module, with Yoneda products.

Classes live on the dual basis of the generators of a minimal free
resolution: the bigraded piece in cohomological degree n and internal degree
-t is dual to the degree-t generators at resolution position -n.  A product
g*f ("g after f") is computed by lifting f to a chain self-map of the
resolution, shifted per the sign conventions of `complexes`, and reading off
the generator-level part of the deep component; minimality of the resolution
makes the answer independent of every choice the solver makes, and the tests
re-solve with a second particular solution to confirm that.

Also here: the contravariant functor on Ext induced by an algebra map, the
automorphism of Ext induced by an algebra automorphism, and the canonical
degree-one class of the one-variable polynomial algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import GradedAlgebra, GradedMorphism, TruncationError
from .complexes import FreeComplex, internal_shift, shift_complex, twist_complex


class LiftError(RuntimeError):
    pass


@dataclass(frozen=True)
class ExtClass:
    n: int
    t: int
    vector: tuple  # coefficients over the (n, t) dual basis

    def is_zero(self):
        return all(not c for c in self.vector)


def _poly_times_element(A: GradedAlgebra, poly, element, out):
    for w, c in poly.items():
        for (gi, u), a in element.items():
            prod = A.normal_form({w + u: c * a}, strict=False)
            for v, b in prod.items():
                key = (gi, v)
                s = out.get(key)
                s = b if s is None else s + b
                if s:
                    out[key] = s
                else:
                    del out[key]


def lift_chain_map(src: FreeComplex, dst: FreeComplex, base_position: int,
                   base: list, push=None, down_to=None, free_value=0) -> dict:
    """Extend a prescribed top component to a chain map src -> dst.

    `base` lists, per source generator at `base_position`, a module element
    of dst at the same position.  Components at lower positions are solved
    degree by degree against dst's differential; exactness of dst guarantees
    a solution whenever the base is a valid start.  `push` (optional) maps
    source differential entries into dst's algebra, for lifts along an
    algebra morphism.
    """
    if down_to is None:
        down_to = min(src.gens)
    comps = {base_position: base}
    for m in range(base_position - 1, down_to - 1, -1):
        prev = comps[m + 1]
        degs = src.gens.get(m, [])
        M = src.diffs.get(m)
        cur = []
        for vi, dv in enumerate(degs):
            rhs = {}
            if M is not None:
                for r, row in enumerate(M):
                    entry = row[vi]
                    if not entry:
                        continue
                    if push is not None:
                        entry = push(entry)
                        if not entry:
                            continue
                    target = prev[r] if r < len(prev) else None
                    if target:
                        _poly_times_element(dst.algebra, entry, target, rhs)
            b = dst.flatten(m + 1, dv, rhs)
            x = dst.outgoing_solver(m, dv).solve(b, free_value=free_value)
            if x is None:
                raise LiftError("no lift at position %d, degree %d" % (m, dv))
            cur.append(dst.unflatten(m, dv, x))
        comps[m] = cur
    return comps


class ExtAlgebra:
    """The Ext-algebra of the trivial module over `algebra`, through (N, D).

    `resolution` must be a minimal free resolution (augmented, positions
    -N..0); for a skew extension it can be a cone resolution, whose generator
    labeling then carries over to the Ext basis.
    """

    def __init__(self, algebra: GradedAlgebra, resolution: FreeComplex,
                 N: int, D: int, free_value=0):
        self.algebra = algebra
        self.resolution = resolution
        self.N = N
        self.D = D
        self.free_value = free_value
        self.bidegrees = {}
        self.labels = []
        for n in range(N + 1):
            degs = resolution.gens.get(-n, [])
            for t in sorted(set(degs)):
                if t > D:
                    continue
                idx = [i for i, dg in enumerate(degs) if dg == t]
                self.bidegrees[(n, t)] = idx
                self.labels.extend((n, t, k) for k in range(len(idx)))
        self._shifted = {}
        self._lifts = {}

    # -- basis bookkeeping ----------------------------------------------------

    def dim(self, n, t):
        return len(self.bidegrees.get((n, t), []))

    def zero(self, n, t):
        return ExtClass(n, t, (self.algebra.field.zero,) * self.dim(n, t))

    def basis_class(self, n, t, k):
        dim = self.dim(n, t)
        if not 0 <= k < dim:
            raise IndexError("no basis element e_{%d,%d,%d}" % (n, t, k))
        one, zero = self.algebra.field.one, self.algebra.field.zero
        return ExtClass(n, t, tuple(one if i == k else zero for i in range(dim)))

    @property
    def unit(self):
        return self.basis_class(0, 0, 0)

    def gen_index(self, n, t, k):
        return self.bidegrees[(n, t)][k]

    def label_name(self, label):
        return "e_{%d,%d,%d}" % label

    def add(self, a: ExtClass, b: ExtClass):
        if (a.n, a.t) != (b.n, b.t):
            raise ValueError("bidegree mismatch")
        return ExtClass(a.n, a.t, tuple(x + y for x, y in zip(a.vector, b.vector)))

    def scale(self, a: ExtClass, c):
        c = self.algebra.field.of(c)
        return ExtClass(a.n, a.t, tuple(c * x for x in a.vector))

    # -- lifting and the Yoneda product ---------------------------------------

    def shifted_resolution(self, n, t):
        key = (n, t)
        got = self._shifted.get(key)
        if got is None:
            got = internal_shift(shift_complex(self.resolution, n), -t)
            self._shifted[key] = got
        return got

    def lift_basis_cocycle(self, label, free_value=None):
        """Chain self-map of the resolution lifting the dual-basis cocycle."""
        fv = self.free_value if free_value is None else free_value
        key = (label, fv)
        got = self._lifts.get(key)
        if got is None:
            n, t, k = label
            gi = self.gen_index(n, t, k)
            dst = self.shifted_resolution(n, t)
            src = self.resolution
            base = []
            for vi, dv in enumerate(src.gens[-n]):
                if vi == gi:
                    base.append({(0, ()): self.algebra.field.one})
                else:
                    base.append({})
            got = lift_chain_map(src, dst, -n, base, down_to=-self.N, free_value=fv)
            self._lifts[key] = got
        return got

    def multiply(self, g: ExtClass, f: ExtClass, free_value=None) -> ExtClass:
        """The Yoneda product g*f ("g after f"); bidegrees add."""
        n, t = g.n + f.n, g.t + f.t
        if n > self.N or t > self.D:
            raise TruncationError("product lands outside the certified window")
        result_idx = self.bidegrees.get((n, t), [])
        out = [self.algebra.field.zero] * len(result_idx)
        g_idx = self.bidegrees.get((g.n, g.t), [])
        for k, c in enumerate(f.vector):
            if not c:
                continue
            comps = self.lift_basis_cocycle((f.n, f.t, k), free_value=free_value)
            comp = comps.get(-n)
            if comp is None:
                raise TruncationError("lift not deep enough")
            for pos, vi in enumerate(result_idx):
                elem = comp[vi]
                acc = self.algebra.field.zero
                for r_pos, r in enumerate(g_idx):
                    gc = g.vector[r_pos]
                    if not gc:
                        continue
                    const = elem.get((r, ()))
                    if const:
                        acc = acc + gc * const
                if acc:
                    out[pos] = out[pos] + c * acc
        return ExtClass(n, t, tuple(out))

    def certified_pair(self, la, lb):
        return la[0] + lb[0] <= self.N and la[1] + lb[1] <= self.D

    def dimension_table(self):
        return {bd: len(idx) for bd, idx in self.bidegrees.items()}


# ---------------------------------------------------------------------------
# functoriality
# ---------------------------------------------------------------------------

class ExtMap:
    """The map on Ext-algebras induced by an algebra morphism (contravariant)."""

    def __init__(self, domain: ExtAlgebra, codomain: ExtAlgebra, blocks: dict):
        self.domain = domain
        self.codomain = codomain
        self.blocks = blocks  # (n, t) -> rows over codomain basis, cols over domain basis

    def apply(self, cls: ExtClass) -> ExtClass:
        block = self.blocks.get((cls.n, cls.t))
        cod_dim = self.codomain.dim(cls.n, cls.t)
        zero = self.codomain.algebra.field.zero
        out = [zero] * cod_dim
        if block is not None:
            for i in range(cod_dim):
                acc = zero
                for j, c in enumerate(cls.vector):
                    if c:
                        acc = acc + block[i][j] * c
                out[i] = acc
        return ExtClass(cls.n, cls.t, tuple(out))

    def matrix(self, n, t):
        return self.blocks.get((n, t))


def ext_functor_map(phi: GradedMorphism, ext_domain: ExtAlgebra,
                    ext_codomain: ExtAlgebra, free_value=0) -> ExtMap:
    """E(phi): Ext of phi's target algebra -> Ext of phi's source algebra.

    Computed from a chain map between the two resolutions lifting phi, which
    exists by exactness; the induced map on Ext does not depend on the lift.
    """
    src = ext_codomain.resolution   # over phi.source
    dst = ext_domain.resolution     # over phi.target
    base = [{(0, ()): phi.target.field.one}]
    comps = lift_chain_map(src, dst, 0, base, push=phi.apply,
                           down_to=-ext_codomain.N, free_value=free_value)
    blocks = {}
    zero = phi.target.field.zero
    for (n, t), dom_idx in ext_domain.bidegrees.items():
        if n > ext_codomain.N or t > ext_codomain.D:
            continue
        cod_idx = ext_codomain.bidegrees.get((n, t), [])
        comp = comps.get(-n)
        rows = []
        for vi in cod_idx:
            elem = comp[vi] if comp is not None and vi < len(comp) else {}
            rows.append([elem.get((r, ()), zero) for r in dom_idx])
        blocks[(n, t)] = rows
    return ExtMap(ext_domain, ext_codomain, blocks)


def compose_ext_maps(outer: ExtMap, inner: ExtMap) -> ExtMap:
    """outer o inner as maps of Ext-algebras."""
    blocks = {}
    zero = outer.codomain.algebra.field.zero
    for bd, inner_block in inner.blocks.items():
        outer_block = outer.blocks.get(bd)
        if outer_block is None:
            continue
        rows = len(outer_block)
        mid = len(inner_block)
        cols = len(inner_block[0]) if inner_block else 0
        M = [[zero] * cols for _ in range(rows)]
        for i in range(rows):
            for j in range(cols):
                acc = zero
                for r in range(mid):
                    acc = acc + outer_block[i][r] * inner_block[r][j]
                M[i][j] = acc
        blocks[bd] = M
    return ExtMap(inner.domain, outer.codomain, blocks)


# ---------------------------------------------------------------------------
# the automorphism of Ext induced by an algebra automorphism
# ---------------------------------------------------------------------------

class ExtAutomorphism:
    """Block-diagonal action on the Ext basis, one matrix per bidegree."""

    def __init__(self, ext: ExtAlgebra, blocks: dict):
        self.ext = ext
        self.blocks = blocks  # (n, t) -> matrix acting on the dual basis

    def apply(self, cls: ExtClass) -> ExtClass:
        block = self.blocks.get((cls.n, cls.t))
        if block is None:
            return cls
        zero = self.ext.algebra.field.zero
        out = [zero] * len(cls.vector)
        for i in range(len(out)):
            acc = zero
            for j, c in enumerate(cls.vector):
                if c:
                    acc = acc + block[i][j] * c
            out[i] = acc
        return ExtClass(cls.n, cls.t, tuple(out))


def induced_ext_automorphism(ext: ExtAlgebra, sigma: GradedMorphism,
                             free_value=0) -> ExtAutomorphism:
    """The automorphism of Ext induced by an algebra automorphism.

    A chain isomorphism from the twisted resolution to the resolution is
    solved for (base component: the automorphism itself, i.e. the identity on
    generators after normalization), and the dual of its generator-level part
    acts on each bidegree of Ext.
    """
    if sigma.inverse is None:
        raise ValueError("need a certified automorphism")
    P = ext.resolution
    src = twist_complex(P, sigma.inverse)  # entries pass through sigma
    base = [{(0, ()): ext.algebra.field.one}]
    comps = lift_chain_map(src, P, 0, base, down_to=-ext.N, free_value=free_value)
    blocks = {}
    zero = ext.algebra.field.zero
    for (n, t), idx in ext.bidegrees.items():
        comp = comps.get(-n)
        # S[r][v] = constant coefficient of the lift on generators; tau acts on
        # the dual basis by the transpose.
        mat = [[zero] * len(idx) for _ in range(len(idx))]
        for col_pos, v in enumerate(idx):
            elem = comp[v] if comp is not None and v < len(comp) else {}
            for row_pos, r in enumerate(idx):
                c = elem.get((r, ()))
                if c:
                    mat[col_pos][row_pos] = c  # transpose into dual action
        blocks[(n, t)] = mat
    return ExtAutomorphism(ext, blocks)


def canonical_z_class(ext_z: ExtAlgebra, l: int) -> ExtClass:
    """The canonical basis of the degree-one Ext of k[z] (internal degree -l)."""
    if ext_z.dim(1, l) != 1:
        raise ValueError("expected a one-dimensional class at (1, %d)" % l)
    return ext_z.basis_class(1, l, 0)

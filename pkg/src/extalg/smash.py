"""Twisted tensor products of bigraded algebras with chosen bases.

A `ProductTable` is a bigraded algebra presented by structure constants on a
finite window of basis elements; a `SmashTwist` is a bigraded linear map
R: Y (x) X -> X (x) Y given on basis pairs.  The twisted product on X (x) Y is

    (x1 (x) y1) * (x2 (x) y2) = sum  x1*x' (x) y'*y2   over R(y1 (x) x2) = sum x' (x) y'

`certify_smash` checks normality, unit laws and associativity on all basis
triples inside the window; `twist_from_factorization` recovers the unique
twist from two algebra maps into a common algebra whose combined
multiplication map is bijective in every bidegree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import GradedAlgebra, GradedMorphism, TruncationError
from .linalg import Echelon


@dataclass
class ProductTable:
    """Structure constants of a bigraded algebra on a finite basis window."""

    field: object
    labels: list                     # ordered (n, t, k)
    unit: tuple
    products: dict                   # (la, lb) -> {label: scalar}, certified pairs only
    window: tuple                    # (N, D)

    def __post_init__(self):
        self.dims = {}
        for (n, t, _k) in self.labels:
            self.dims[(n, t)] = self.dims.get((n, t), 0) + 1

    def dim(self, n, t):
        return self.dims.get((n, t), 0)

    def basis_at(self, n, t):
        return [lab for lab in self.labels if lab[0] == n and lab[1] == t]

    def unit_vector(self):
        return {self.unit: self.field.one}

    def mul_basis(self, la, lb):
        got = self.products.get((la, lb))
        if got is None:
            raise TruncationError("uncertified product %s * %s" % (la, lb))
        return got

    def mul(self, va, vb):
        out = {}
        for la, ca in va.items():
            if not ca:
                continue
            for lb, cb in vb.items():
                if not cb:
                    continue
                for lc, c in self.mul_basis(la, lb).items():
                    s = out.get(lc)
                    s = ca * cb * c if s is None else s + ca * cb * c
                    if s:
                        out[lc] = s
                    else:
                        del out[lc]
        return out


def ext_product_table(ext) -> ProductTable:
    """Tabulate all certified basis products of an ExtAlgebra."""
    products = {}
    for la in ext.labels:
        for lb in ext.labels:
            if not ext.certified_pair(la, lb):
                continue
            a = ext.basis_class(*la)
            b = ext.basis_class(*lb)
            cls = ext.multiply(a, b)
            out_labels = ext.bidegrees.get((cls.n, cls.t), [])
            vec = {}
            for pos in range(len(out_labels)):
                c = cls.vector[pos]
                if c:
                    vec[(cls.n, cls.t, pos)] = c
            products[(la, lb)] = vec
    return ProductTable(
        field=ext.algebra.field,
        labels=list(ext.labels),
        unit=(0, 0, 0),
        products=products,
        window=(ext.N, ext.D),
    )


def algebra_table(A: GradedAlgebra, D: int) -> ProductTable:
    """A connected graded algebra as a (0, d)-bigraded product table."""
    labels = []
    for d in range(D + 1):
        labels.extend((0, d, k) for k in range(len(A.basis[d])))
    products = {}
    for (_, d1, k1) in labels:
        for (_, d2, k2) in labels:
            if d1 + d2 > D:
                continue
            w = A.normal_form({A.basis[d1][k1] + A.basis[d2][k2]: A.field.one})
            vec = {}
            for u, c in w.items():
                vec[(0, d1 + d2, A._index[d1 + d2][u])] = c
            products[((0, d1, k1), (0, d2, k2))] = vec
    return ProductTable(A.field, labels, (0, 0, 0), products, (0, D))


@dataclass
class SmashTwist:
    """A bigraded twist R: Y (x) X -> X (x) Y on basis pairs, with status."""

    left: ProductTable       # X
    right: ProductTable      # Y
    twist: dict              # (ylabel, xlabel) -> {(xlabel, ylabel): scalar}
    status: str = "unchecked"

    def apply(self, ylabel, xlabel):
        got = self.twist.get((ylabel, xlabel))
        if got is None:
            raise TruncationError("twist not defined on (%s, %s)" % (ylabel, xlabel))
        return got


def flip_twist(X: ProductTable, Y: ProductTable) -> SmashTwist:
    """The untwisted flip, giving the ordinary tensor product."""
    one = X.field.one
    twist = {}
    for yl in Y.labels:
        for xl in X.labels:
            twist[(yl, xl)] = {(xl, yl): one}
    return SmashTwist(X, Y, twist)


def smash_multiply(T: SmashTwist, e1: dict, e2: dict) -> dict:
    """Product of two elements of X (x) Y written over basis pairs."""
    X, Y = T.left, T.right
    out = {}
    for (x1, y1), c1 in e1.items():
        if not c1:
            continue
        for (x2, y2), c2 in e2.items():
            if not c2:
                continue
            c12 = c1 * c2
            for (xm, ym), r in T.apply(y1, x2).items():
                xprod = X.mul_basis(x1, xm)
                yprod = Y.mul_basis(ym, y2)
                for xl, cx in xprod.items():
                    for yl, cy in yprod.items():
                        key = (xl, yl)
                        add = c12 * r * cx * cy
                        s = out.get(key)
                        s = add if s is None else s + add
                        if s:
                            out[key] = s
                        else:
                            del out[key]
    return out


def _pair_bidegree(pair):
    (xl, yl) = pair
    return (xl[0] + yl[0], xl[1] + yl[1])


def certify_smash(T: SmashTwist, N: int, D: int):
    """Check bigradedness, normality, unit law and associativity on the window.

    Returns (status, counterexample); status is "smash-certified-to-(N,D)" on
    success, and the counterexample names the offending pair or triple.
    """
    X, Y = T.left, T.right
    for (yl, xl), image in T.twist.items():
        want = (xl[0] + yl[0], xl[1] + yl[1])
        for (xm, ym), c in image.items():
            if c and (xm[0] + ym[0], xm[1] + ym[1]) != want:
                return "failed", ("not bigraded", (yl, xl))
    one = X.field.one
    for xl in X.labels:
        img = T.apply(Y.unit, xl)
        if img != {(xl, Y.unit): one}:
            return "failed", ("unit law (left factor)", (Y.unit, xl))
    for yl in Y.labels:
        img = T.apply(yl, X.unit)
        if img != {(X.unit, yl): one}:
            return "failed", ("unit law (right factor)", (yl, X.unit))
    T.status = "normal"

    pairs = [
        (xl, yl)
        for xl in X.labels
        for yl in Y.labels
        if xl[0] + yl[0] <= N and xl[1] + yl[1] <= D
    ]
    unit = {(X.unit, Y.unit): one}
    for p in pairs:
        e = {p: one}
        if smash_multiply(T, unit, e) != e or smash_multiply(T, e, unit) != e:
            return "failed", ("unit law", p)
    for p1 in pairs:
        n1, t1 = _pair_bidegree(p1)
        for p2 in pairs:
            n2, t2 = _pair_bidegree(p2)
            if n1 + n2 > N or t1 + t2 > D:
                continue
            e12 = smash_multiply(T, {p1: one}, {p2: one})
            for p3 in pairs:
                n3, t3 = _pair_bidegree(p3)
                if n1 + n2 + n3 > N or t1 + t2 + t3 > D:
                    continue
                left = smash_multiply(T, e12, {p3: one})
                right = smash_multiply(
                    T, {p1: one}, smash_multiply(T, {p2: one}, {p3: one})
                )
                if left != right:
                    return "failed", ("associativity", (p1, p2, p3))
    T.status = "smash-certified-to-(%d,%d)" % (N, D)
    return T.status, None


def skew_commutation_twist(A: GradedAlgebra, sigma: GradedMorphism, l: int,
                           D: int, Z: GradedAlgebra) -> SmashTwist:
    """The twist z^i (x) a |-> sigma^i(a) (x) z^i on truncated bases.

    X is the algebra A, Y the polynomial algebra on z; the resulting smash
    product realizes the skew extension A[z; sigma].
    """
    X = algebra_table(A, D)
    Y = algebra_table(Z, D)
    twist = {}
    # sigma^i of every basis word, computed incrementally
    images = {w: {w: A.field.one} for d in range(D + 1) for w in A.basis[d]}
    for (_, ydeg, _yk) in Y.labels:
        i = ydeg // l
        ylabel = (0, ydeg, 0)
        for d in range(D + 1):
            for k, w in enumerate(A.basis[d]):
                vec = {}
                for u, c in images[w].items():
                    vec[((0, d, A._index[d][u]), ylabel)] = c
                twist[(ylabel, (0, d, k))] = vec
        step = {}
        for d in range(D + 1):
            for w in A.basis[d]:
                step[w] = sigma.apply(images[w])
        images = step
    return SmashTwist(X, Y, twist)


def skew_smash_transport_report(A: GradedAlgebra, sigma: GradedMorphism, l: int,
                                B: GradedAlgebra, zname: str, D: int) -> dict:
    """Check that A #_R k[z] with the commutation twist is B itself.

    The bijection a (x) z^i |-> normal form of a*z^i in B must be invertible
    degree by degree and must transport the smash product to B's normal-form
    product on all basis pairs through degree D.
    """
    from .algebra import polynomial_algebra_presentation

    Z = GradedAlgebra(polynomial_algebra_presentation(A.field, zname, l), D)
    T = skew_commutation_twist(A, sigma, l, D, Z)
    status, bad = certify_smash(T, 0, D)
    report = {"certified": status.startswith("smash-certified"), "counterexample": bad}
    zi = B.free.index[zname]

    def embed(xl, yl):
        w = A.basis[xl[1]][xl[2]]
        i = yl[1] // l
        return B.normal_form({w + (zi,) * i: B.field.one})

    pair_elems = {}
    for xl in T.left.labels:
        for yl in T.right.labels:
            d = xl[1] + yl[1]
            if d <= D:
                pair_elems.setdefault(d, []).append((xl, yl))
    bijective = True
    for d, pairs in pair_elems.items():
        if len(pairs) != B.hilbert(d):
            bijective = False
            report["dimension_mismatch"] = d
            break
        rows = [{} for _ in range(B.hilbert(d))]
        for j, (xl, yl) in enumerate(pairs):
            for idx, c in B.coords(embed(xl, yl), d).items():
                rows[idx][j] = c
        if Echelon(rows, len(pairs), B.field).rank != len(pairs):
            bijective = False
            report["singular_degree"] = d
            break
    report["bijective"] = bijective
    transported = bijective and report["certified"]
    if transported:
        for d1, pairs1 in pair_elems.items():
            for p1 in pairs1:
                for d2, pairs2 in pair_elems.items():
                    if d1 + d2 > D:
                        continue
                    for p2 in pairs2:
                        prod = smash_multiply(T, {p1: A.field.one}, {p2: A.field.one})
                        lhs = {}
                        for (xl, yl), c in prod.items():
                            for w, a in embed(xl, yl).items():
                                s = lhs.get(w)
                                s = c * a if s is None else s + c * a
                                if s:
                                    lhs[w] = s
                                else:
                                    del lhs[w]
                        rhs = B.mul(embed(*p1), embed(*p2))
                        if lhs != rhs:
                            transported = False
                            report["product_mismatch"] = (p1, p2)
                            break
                    if not transported:
                        break
                if not transported:
                    break
            if not transported:
                break
    report["transported"] = transported
    report["passed"] = report["certified"] and bijective and transported
    return report


class NotAFactorization(ValueError):
    def __init__(self, bidegree, reason=""):
        self.bidegree = bidegree
        super().__init__("no factorization at bidegree %s %s" % (bidegree, reason))


def twist_from_factorization(C: ProductTable, fX: dict, fY: dict,
                             X: ProductTable, Y: ProductTable,
                             N: int, D: int) -> SmashTwist:
    """Recover the unique twist making C = X #_R Y through the given maps.

    fX, fY send basis labels of X resp. Y to vectors in C.  For every
    bidegree within the window, the combined multiplication (x, y) |->
    fX(x) fY(y) must be a bijection onto C's piece; R(y (x) x) is then the
    preimage of fY(y) fX(x), solved bidegree by bidegree.
    """
    pairs_at = {}
    for xl in X.labels:
        for yl in Y.labels:
            bd = (xl[0] + yl[0], xl[1] + yl[1])
            if bd[0] <= N and bd[1] <= D:
                pairs_at.setdefault(bd, []).append((xl, yl))
    solvers = {}
    c_basis_at = {}
    for bd, pairs in sorted(pairs_at.items()):
        cb = C.basis_at(*bd)
        if len(cb) != len(pairs):
            raise NotAFactorization(bd, "(%d pairs vs dim %d)" % (len(pairs), len(cb)))
        index = {lab: i for i, lab in enumerate(cb)}
        rows = [{} for _ in cb]
        for j, (xl, yl) in enumerate(pairs):
            vec = C.mul(fX[xl], fY[yl])
            for lab, c in vec.items():
                rows[index[lab]][j] = c
        ech = Echelon(rows, len(pairs), C.field)
        if ech.rank != len(pairs):
            raise NotAFactorization(bd, "(combined multiplication not bijective)")
        solvers[bd] = (ech, pairs, index)
    twist = {}
    for bd, (ech, pairs, index) in solvers.items():
        for yl in Y.labels:
            for xl in X.labels:
                if (xl[0] + yl[0], xl[1] + yl[1]) != bd:
                    continue
                vec = C.mul(fY[yl], fX[xl])
                b = {index[lab]: c for lab, c in vec.items()}
                sol = ech.solve(b)
                if sol is None:
                    raise NotAFactorization(bd, "(image not in the span)")
                twist[(yl, xl)] = {pairs[j]: c for j, c in sol.items() if c}
    return SmashTwist(X, Y, twist)

"""Finitely presented abelian groups.

A group is ``Z^g`` modulo the row space of a relation matrix; a morphism is
an integer matrix ``M`` (row convention) together with a lift ``X``
certifying ``rels_dom . M == X . rels_cod``, so that ``M`` descends to the
quotients. Two morphisms are equal when their matrices differ by rows in the
row space of the codomain relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .category import AbelianCategory, AdditiveFunctor, DirectSum, Term
from .errors import DimensionError, IllTypedError, NotWellDefinedError
from .linalg import ZMatrix
from .zfree import FreeMorphism, FreeObject, zfree_capability


@dataclass(frozen=True)
class PresentedGroup:
    gens: int
    rels: ZMatrix

    def __post_init__(self):
        if self.rels.cols != self.gens:
            raise DimensionError(f"relation matrix has {self.rels.cols} columns, expected {self.gens}")

    def __repr__(self) -> str:
        return f"PresentedGroup({self.gens}, {self.rels!r})"


@dataclass(frozen=True)
class GroupMorphism:
    dom: PresentedGroup
    cod: PresentedGroup
    M: ZMatrix
    lift: ZMatrix = field(compare=False, repr=False)

    def __post_init__(self):
        if self.M.shape != (self.dom.gens, self.cod.gens):
            raise DimensionError(f"matrix {self.M.shape} does not fit "
                                 f"{self.dom.gens} -> {self.cod.gens} generators")
        if self.dom.rels @ self.M != self.lift @ self.cod.rels:
            raise NotWellDefinedError("not a well-defined morphism: lift equation fails")


@dataclass(frozen=True)
class InvariantFactors:
    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        t = self.torsion
        if any(d < 2 for d in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"not an invariant-factor chain: {t}")

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


def make_group(R: ZMatrix, gens: int | None = None) -> PresentedGroup:
    if gens is not None and R.cols != gens:
        raise DimensionError("relation matrix does not match the generator count")
    return PresentedGroup(R.cols, R)


def free_group(g: int) -> PresentedGroup:
    return PresentedGroup(g, ZMatrix.zero(0, g))


def cyclic(n: int) -> PresentedGroup:
    return PresentedGroup(1, ZMatrix([[n]]))


def make_group_morphism(A: PresentedGroup, B: PresentedGroup, M: ZMatrix) -> GroupMorphism:
    if M.shape != (A.gens, B.gens):
        raise DimensionError(f"matrix {M.shape} does not fit {A.gens} -> {B.gens} generators")
    X = linalg.solve_left(B.rels, A.rels @ M)
    if X is None:
        raise NotWellDefinedError("not a well-defined morphism: relations are not preserved")
    return GroupMorphism(A, B, M, X)


def invariant_factors(G: PresentedGroup) -> InvariantFactors:
    d = linalg.snf(G.rels).diagonal
    rank = sum(1 for x in d if x)
    return InvariantFactors(G.gens - rank, tuple(x for x in d if x > 1))


def is_zero_group(G: PresentedGroup) -> bool:
    return invariant_factors(G).is_zero


class ZMod(AbelianCategory):
    """Abelian-category capability of finitely presented abelian groups."""

    name = "Z-mod"

    # -- additive structure -----------------------------------------------

    def dom(self, f: GroupMorphism) -> PresentedGroup:
        return f.dom

    def cod(self, f: GroupMorphism) -> PresentedGroup:
        return f.cod

    def compose(self, f: GroupMorphism, g: GroupMorphism) -> GroupMorphism:
        if f.cod != g.dom:
            raise IllTypedError("group morphisms are not composable")
        return GroupMorphism(f.dom, g.cod, f.M @ g.M, f.lift @ g.lift)

    def _parallel(self, f: GroupMorphism, g: GroupMorphism) -> None:
        if f.dom != g.dom or f.cod != g.cod:
            raise IllTypedError("group morphisms are not parallel")

    def add(self, f: GroupMorphism, g: GroupMorphism) -> GroupMorphism:
        self._parallel(f, g)
        return GroupMorphism(f.dom, f.cod, f.M + g.M, f.lift + g.lift)

    def neg(self, f: GroupMorphism) -> GroupMorphism:
        return GroupMorphism(f.dom, f.cod, -f.M, -f.lift)

    def sub(self, f: GroupMorphism, g: GroupMorphism) -> GroupMorphism:
        self._parallel(f, g)
        return GroupMorphism(f.dom, f.cod, f.M - g.M, f.lift - g.lift)

    def scale(self, f: GroupMorphism, n: int) -> GroupMorphism:
        return GroupMorphism(f.dom, f.cod, f.M.scale(n), f.lift.scale(n))

    def zero(self, A: PresentedGroup, B: PresentedGroup) -> GroupMorphism:
        return GroupMorphism(A, B, ZMatrix.zero(A.gens, B.gens),
                             ZMatrix.zero(A.rels.rows, B.rels.rows))

    def identity(self, A: PresentedGroup) -> GroupMorphism:
        return GroupMorphism(A, A, ZMatrix.identity(A.gens), ZMatrix.identity(A.rels.rows))

    def zero_object(self) -> PresentedGroup:
        return free_group(0)

    def _direct_sum(self, objects: Sequence[PresentedGroup]) -> DirectSum:
        g = sum(G.gens for G in objects)
        r = sum(G.rels.rows for G in objects)
        R = ZMatrix.zero(r, g)
        rows = []
        gpos = 0
        for G in objects:
            for row in G.rels.tolist():
                rows.append([0] * gpos + row + [0] * (g - gpos - G.gens))
            gpos += G.gens
        S = PresentedGroup(g, ZMatrix(rows, r, g) if rows else R)
        inj, proj = [], []
        gpos = rpos = 0
        for G in objects:
            e = ZMatrix([[int(j == gpos + i) for j in range(g)] for i in range(G.gens)], G.gens, g)
            er = ZMatrix([[int(j == rpos + i) for j in range(r)] for i in range(G.rels.rows)],
                         G.rels.rows, r)
            inj.append(GroupMorphism(G, S, e, er))
            proj.append(GroupMorphism(S, G, e.T, er.T))
            gpos += G.gens
            rpos += G.rels.rows
        return DirectSum(S, tuple(objects), tuple(inj), tuple(proj))

    def matrix(self, rows, cols, entries) -> GroupMorphism:
        if len(entries) != len(rows) or any(len(r) != len(cols) for r in entries):
            raise IllTypedError("block entries do not match the summand lists")
        S = self.direct_sum(rows).obj
        T = self.direct_sum(cols).obj
        if not rows or not cols:
            return self.zero(S, T)
        mb, lb = [], []
        for R, row in zip(rows, entries):
            mline, lline = [], []
            for C, e in zip(cols, row):
                e = self._entry(R, C, e)
                if e is None:
                    mline.append(ZMatrix.zero(R.gens, C.gens))
                    lline.append(ZMatrix.zero(R.rels.rows, C.rels.rows))
                else:
                    mline.append(e.M)
                    lline.append(e.lift)
            mb.append(mline)
            lb.append(lline)
        return GroupMorphism(S, T, ZMatrix.block(mb), ZMatrix.block(lb))

    # -- equality and equations -------------------------------------------

    def equal(self, f: GroupMorphism, g: GroupMorphism) -> bool:
        self._parallel(f, g)
        return linalg.solve_left(f.cod.rels, f.M - g.M) is not None

    def is_zero_object(self, A: PresentedGroup) -> bool:
        return is_zero_group(A)

    def solve_system(self, unknowns, equations: Sequence[tuple[Sequence[Term], GroupMorphism]]):
        # Unknowns X_i: G_i -> H_i together with lifts W_i (rels_G X = W rels_H),
        # and a slack Y_e per equation for the codomain relations.
        n = len(unknowns)
        shapes = [(G.gens, H.gens) for G, H in unknowns]
        shapes += [(G.rels.rows, H.rels.rows) for G, H in unknowns]
        eqs = []
        for i, (G, H) in enumerate(unknowns):
            eqs.append(([(i, G.rels, ZMatrix.identity(H.gens)),
                         (n + i, ZMatrix.identity(G.rels.rows), -H.rels)],
                        ZMatrix.zero(G.rels.rows, H.gens)))
        for e, (terms, rhs) in enumerate(equations):
            mats = []
            for i, L, R in terms:
                G, H = unknowns[i]
                if L.cod != G or R.dom != H or L.dom != rhs.dom or R.cod != rhs.cod:
                    raise IllTypedError("term does not fit its equation")
                mats.append((i, L.M, R.M))
            E, F = rhs.dom, rhs.cod
            shapes.append((E.gens, F.rels.rows))
            mats.append((2 * n + e, ZMatrix.identity(E.gens), -F.rels))
            eqs.append((mats, rhs.M))
        sol = linalg.solve_terms(shapes, eqs)
        if sol is None:
            return None
        return [GroupMorphism(G, H, sol[i], sol[n + i]) for i, (G, H) in enumerate(unknowns)]

    # -- abelian structure ------------------------------------------------

    def kernel(self, m: GroupMorphism) -> tuple[PresentedGroup, GroupMorphism]:
        G, H = m.dom, m.cod
        gens = _v_block(linalg.kernel_basis(m.M.vstack(H.rels)), G.gens)
        rels = _v_block(linalg.kernel_basis(gens.vstack(G.rels)), gens.rows)
        K = PresentedGroup(gens.rows, rels)
        return K, make_group_morphism(K, G, gens)

    def cokernel(self, m: GroupMorphism) -> tuple[PresentedGroup, GroupMorphism]:
        H = m.cod
        C = PresentedGroup(H.gens, m.M.vstack(H.rels))
        return C, make_group_morphism(H, C, ZMatrix.identity(H.gens))

    def image(self, m: GroupMorphism) -> tuple[PresentedGroup, GroupMorphism, GroupMorphism]:
        G = m.dom
        rels = _v_block(linalg.kernel_basis(m.M.vstack(m.cod.rels)), G.gens)
        Im = PresentedGroup(G.gens, rels)
        return (Im, make_group_morphism(G, Im, ZMatrix.identity(G.gens)),
                make_group_morphism(Im, m.cod, m.M))

    def is_iso(self, f: GroupMorphism) -> bool:
        return self.is_mono(f) and self.is_epi(f)


def _v_block(K: ZMatrix, width: int) -> ZMatrix:
    """Hermite-reduced basis of the first ``width`` columns of the rows of ``K``."""
    V = K.submatrix(range(K.rows), range(width))
    h = linalg.hnf(V)
    return h.H.submatrix(range(h.rank), range(width))


_ZMOD = ZMod()


def zmod_capability() -> ZMod:
    return _ZMOD


def group_kernel(m: GroupMorphism):
    return _ZMOD.kernel(m)


def group_cokernel(m: GroupMorphism):
    return _ZMOD.cokernel(m)


def group_image(m: GroupMorphism):
    return _ZMOD.image(m)


def embed_free(x: FreeObject | FreeMorphism) -> PresentedGroup | GroupMorphism:
    """The embedding ``E``: free groups keep their matrices and get no relations."""
    if isinstance(x, FreeObject):
        return free_group(x.rank)
    if isinstance(x, FreeMorphism):
        return GroupMorphism(free_group(x.dom.rank), free_group(x.cod.rank), x.mat,
                             ZMatrix.zero(0, 0))
    raise IllTypedError("expected a FreeObject or FreeMorphism")


E = AdditiveFunctor(zfree_capability(), _ZMOD, embed_free, embed_free, "E")

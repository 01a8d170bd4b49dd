"""The category of finitely generated free abelian groups.

Objects are ranks, morphisms are integer matrices in the row convention:
``Z^m -> Z^n`` is an ``m x n`` matrix and composition is the matrix product
in diagrammatic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .category import AdditiveCategory, DirectSum, OpRealization, Term
from .errors import DimensionError, IllTypedError, NotInvertibleError
from .linalg import ZMatrix


@dataclass(frozen=True)
class FreeObject:
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise DimensionError(f"negative rank {self.rank}")

    def __repr__(self) -> str:
        return f"Z^{self.rank}"


@dataclass(frozen=True)
class FreeMorphism:
    dom: FreeObject
    cod: FreeObject
    mat: ZMatrix

    def __post_init__(self):
        if self.mat.shape != (self.dom.rank, self.cod.rank):
            raise DimensionError(
                f"matrix {self.mat.shape} does not fit Z^{self.dom.rank} -> Z^{self.cod.rank}")

    @classmethod
    def of(cls, rows, dom: int | None = None, cod: int | None = None) -> "FreeMorphism":
        """Build from nested lists; ``dom``/``cod`` are needed for empty shapes."""
        m = rows if isinstance(rows, ZMatrix) else ZMatrix(rows, dom, cod)
        return cls(FreeObject(m.rows), FreeObject(m.cols), m)

    def __repr__(self) -> str:
        return f"FreeMorphism({self.mat!r})"


def free(rank: int) -> FreeObject:
    return FreeObject(rank)


def mor(rows, dom: int | None = None, cod: int | None = None) -> FreeMorphism:
    return FreeMorphism.of(rows, dom, cod)


class ZFree(AdditiveCategory):
    """Additive-category capability of free abelian groups of finite rank."""

    name = "Z-free"

    def dom(self, f: FreeMorphism) -> FreeObject:
        return f.dom

    def cod(self, f: FreeMorphism) -> FreeObject:
        return f.cod

    def compose(self, f: FreeMorphism, g: FreeMorphism) -> FreeMorphism:
        if f.cod != g.dom:
            raise IllTypedError(f"cannot compose {f.dom}->{f.cod} with {g.dom}->{g.cod}")
        return FreeMorphism(f.dom, g.cod, f.mat @ g.mat)

    def _check_parallel(self, f: FreeMorphism, g: FreeMorphism) -> None:
        if f.dom != g.dom or f.cod != g.cod:
            raise IllTypedError("morphisms are not parallel")

    def add(self, f: FreeMorphism, g: FreeMorphism) -> FreeMorphism:
        self._check_parallel(f, g)
        return FreeMorphism(f.dom, f.cod, f.mat + g.mat)

    def neg(self, f: FreeMorphism) -> FreeMorphism:
        return FreeMorphism(f.dom, f.cod, -f.mat)

    def sub(self, f: FreeMorphism, g: FreeMorphism) -> FreeMorphism:
        self._check_parallel(f, g)
        return FreeMorphism(f.dom, f.cod, f.mat - g.mat)

    def scale(self, f: FreeMorphism, n: int) -> FreeMorphism:
        return FreeMorphism(f.dom, f.cod, f.mat.scale(n))

    def zero(self, A: FreeObject, B: FreeObject) -> FreeMorphism:
        return FreeMorphism(A, B, ZMatrix.zero(A.rank, B.rank))

    def identity(self, A: FreeObject) -> FreeMorphism:
        return FreeMorphism(A, A, ZMatrix.identity(A.rank))

    def zero_object(self) -> FreeObject:
        return FreeObject(0)

    def _direct_sum(self, objects: Sequence[FreeObject]) -> DirectSum:
        n = sum(X.rank for X in objects)
        S = FreeObject(n)
        inj, proj, pos = [], [], 0
        for X in objects:
            e = ZMatrix([[int(j == pos + i) for j in range(n)] for i in range(X.rank)], X.rank, n)
            inj.append(FreeMorphism(X, S, e))
            proj.append(FreeMorphism(S, X, e.T))
            pos += X.rank
        return DirectSum(S, tuple(objects), tuple(inj), tuple(proj))

    def matrix(self, rows, cols, entries) -> FreeMorphism:
        if len(entries) != len(rows) or any(len(r) != len(cols) for r in entries):
            raise IllTypedError("block entries do not match the summand lists")
        blocks = []
        for R, row in zip(rows, entries):
            line = []
            for C, e in zip(cols, row):
                e = self._entry(R, C, e)
                line.append(ZMatrix.zero(R.rank, C.rank) if e is None else e.mat)
            blocks.append(line)
        if not rows or not cols:
            n, m = sum(R.rank for R in rows), sum(C.rank for C in cols)
            return self.zero(FreeObject(n), FreeObject(m))
        M = ZMatrix.block(blocks)
        return FreeMorphism(FreeObject(M.rows), FreeObject(M.cols), M)

    def equal(self, f: FreeMorphism, g: FreeMorphism) -> bool:
        self._check_parallel(f, g)
        return f.mat == g.mat

    def is_zero_object(self, A: FreeObject) -> bool:
        return A.rank == 0

    def solve_homotopy(self, a1: FreeMorphism, b0: FreeMorphism, C: FreeMorphism):
        if C.dom != a1.dom or C.cod != b0.cod:
            raise IllTypedError("solve_homotopy: right-hand side has the wrong type")
        sol = linalg.solve_homotopy(a1.mat, b0.mat, C.mat)
        if sol is None:
            return None
        S, T = sol
        return FreeMorphism(a1.dom, b0.dom, S), FreeMorphism(a1.cod, b0.cod, T)

    def solve_system(self, unknowns, equations: Sequence[tuple[Sequence[Term], FreeMorphism]]):
        shapes = [(A.rank, B.rank) for A, B in unknowns]
        eqs = []
        for terms, rhs in equations:
            mats = []
            for i, L, R in terms:
                A, B = unknowns[i]
                if L.cod != A or R.dom != B or L.dom != rhs.dom or R.cod != rhs.cod:
                    raise IllTypedError("term does not fit its equation")
                mats.append((i, L.mat, R.mat))
            eqs.append((mats, rhs.mat))
        sol = linalg.solve_terms(shapes, eqs)
        if sol is None:
            return None
        return [FreeMorphism(A, B, X) for (A, B), X in zip(unknowns, sol)]

    def inverse(self, f: FreeMorphism) -> FreeMorphism:
        if f.dom.rank != f.cod.rank or f.mat.det() not in (1, -1):
            raise NotInvertibleError("matrix is not unimodular")
        X = linalg.solve_left(f.mat, ZMatrix.identity(f.dom.rank))
        return FreeMorphism(f.cod, f.dom, X)

    def is_iso(self, f: FreeMorphism) -> bool:
        return f.dom.rank == f.cod.rank and f.mat.det() in (1, -1)

    def transpose(self, f: FreeMorphism) -> FreeMorphism:
        return FreeMorphism(f.cod, f.dom, f.mat.T)

    def op(self) -> OpRealization:
        return OpRealization(self, lambda X: X, self.transpose)


_ZFREE = ZFree()


def zfree_capability() -> ZFree:
    """The shared ``Z-free`` capability instance."""
    return _ZFREE


def direct_sum(objects: Sequence[FreeObject]) -> DirectSum:
    return _ZFREE.direct_sum(objects)


def compose(f: FreeMorphism, g: FreeMorphism) -> FreeMorphism:
    return _ZFREE.compose(f, g)

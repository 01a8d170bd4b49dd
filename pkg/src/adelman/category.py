"""Additive-category capability, additive functors and transformations.

The Adelman construction is written against :class:`AdditiveCategory`; a
concrete instance supplies composition, direct sums and, because equality
in the Adelman category is a solvability question, a linear solver for
equations between morphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .errors import IllTypedError, NotInvertibleError, PreconditionError

Obj = Any
Mor = Any

# A term ``(i, L, R)`` stands for ``L . X_i . R`` (diagrammatic order).
Term = tuple[int, Mor, Mor]


@dataclass(frozen=True)
class DirectSum:
    """A chosen direct sum with injections ``i_k`` and projections ``p_k``."""

    obj: Obj
    summands: tuple
    injections: tuple
    projections: tuple


class AdditiveCategory:
    """Interface contract for an additive category.

    Composition is diagrammatic: ``compose(f, g)`` is "f then g". Subclasses
    must implement the abstract members; the remaining ones have generic
    defaults that may be overridden for speed.
    """

    name = "additive category"

    # -- abstract ---------------------------------------------------------

    def dom(self, f: Mor) -> Obj:
        raise NotImplementedError

    def cod(self, f: Mor) -> Obj:
        raise NotImplementedError

    def compose(self, f: Mor, g: Mor) -> Mor:
        raise NotImplementedError

    def add(self, f: Mor, g: Mor) -> Mor:
        raise NotImplementedError

    def neg(self, f: Mor) -> Mor:
        raise NotImplementedError

    def zero(self, A: Obj, B: Obj) -> Mor:
        raise NotImplementedError

    def identity(self, A: Obj) -> Mor:
        raise NotImplementedError

    def zero_object(self) -> Obj:
        raise NotImplementedError

    def _direct_sum(self, objects: Sequence[Obj]) -> DirectSum:
        raise NotImplementedError

    def equal(self, f: Mor, g: Mor) -> bool:
        raise NotImplementedError

    def solve_system(self, unknowns: Sequence[tuple[Obj, Obj]],
                     equations: Sequence[tuple[Sequence[Term], Mor]]) -> list[Mor] | None:
        """Solve ``sum(L . X_i . R) == rhs`` for every equation (equality in this category).

        ``unknowns[i]`` is the (domain, codomain) of ``X_i``. Returns the
        unknowns or ``None`` when the system has no solution.
        """
        raise NotImplementedError

    # -- optional ---------------------------------------------------------

    def op(self) -> "OpRealization | None":
        """Realisation of the opposite category, if this instance has one."""
        return None

    # -- derived ----------------------------------------------------------

    def sub(self, f: Mor, g: Mor) -> Mor:
        return self.add(f, self.neg(g))

    def scale(self, f: Mor, n: int) -> Mor:
        out = self.zero(self.dom(f), self.cod(f))
        step = f if n >= 0 else self.neg(f)
        for _ in range(abs(n)):
            out = self.add(out, step)
        return out

    def chain(self, *fs: Mor) -> Mor:
        """Diagrammatic composite of one or more morphisms."""
        out = fs[0]
        for g in fs[1:]:
            out = self.compose(out, g)
        return out

    def total(self, A: Obj, B: Obj, fs: Sequence[Mor]) -> Mor:
        """Sum of morphisms ``A -> B`` (zero for an empty list)."""
        out = self.zero(A, B)
        for f in fs:
            out = self.add(out, f)
        return out

    def direct_sum(self, objects: Sequence[Obj]) -> DirectSum:
        objects = tuple(objects)
        if len(objects) == 1:
            one = self.identity(objects[0])
            return DirectSum(objects[0], objects, (one,), (one,))
        return self._direct_sum(objects)

    def is_zero(self, f: Mor) -> bool:
        return self.equal(f, self.zero(self.dom(f), self.cod(f)))

    def is_zero_object(self, A: Obj) -> bool:
        return self.is_zero(self.identity(A))

    def solve_homotopy(self, a1: Mor, b0: Mor, C: Mor) -> tuple[Mor, Mor] | None:
        """Find ``(s, t)`` with ``s . b0 + a1 . t == C``."""
        A1, A2 = self.dom(a1), self.cod(a1)
        B0, B1 = self.dom(b0), self.cod(b0)
        sol = self.solve_system(
            [(A1, B0), (A2, B1)],
            [([(0, self.identity(A1), b0), (1, a1, self.identity(B1))], C)],
        )
        return None if sol is None else (sol[0], sol[1])

    def lift(self, g: Mor, m: Mor) -> Mor | None:
        """Some ``u`` with ``u . m == g`` (``g``'s domain to ``m``'s domain)."""
        if self.is_literal_identity(m):
            return g
        X, Y = self.dom(g), self.dom(m)
        sol = self.solve_system([(X, Y)], [([(0, self.identity(X), m)], g)])
        return None if sol is None else sol[0]

    def descend(self, e: Mor, g: Mor) -> Mor | None:
        """Some ``u`` with ``e . u == g`` (``e``'s codomain to ``g``'s codomain)."""
        if self.is_literal_identity(e):
            return g
        X, Y = self.cod(e), self.cod(g)
        sol = self.solve_system([(X, Y)], [([(0, e, self.identity(Y))], g)])
        return None if sol is None else sol[0]

    def is_literal_identity(self, f: Mor) -> bool:
        """True iff ``f`` is, as a value, the chosen identity of its domain."""
        A = self.dom(f)
        return A == self.cod(f) and f == self.identity(A)

    def inverse(self, f: Mor) -> Mor:
        A, B = self.dom(f), self.cod(f)
        sol = self.solve_system(
            [(B, A)],
            [([(0, f, self.identity(A))], self.identity(A)),
             ([(0, self.identity(B), f)], self.identity(B))],
        )
        if sol is None:
            raise NotInvertibleError("morphism is not invertible")
        return sol[0]

    def is_iso(self, f: Mor) -> bool:
        try:
            self.inverse(f)
        except NotInvertibleError:
            return False
        return True

    def matrix(self, rows: Sequence[Obj], cols: Sequence[Obj],
               entries: Sequence[Sequence[Mor | int | None]]) -> Mor:
        """Block morphism ``(+)rows -> (+)cols``.

        An entry may be a morphism, ``None`` or ``0`` for zero, or ``1`` for
        the identity (row and column object must agree) or another integer
        for that multiple of the identity.
        """
        S = self.direct_sum(rows)
        T = self.direct_sum(cols)
        if len(entries) != len(rows) or any(len(r) != len(cols) for r in entries):
            raise IllTypedError("block entries do not match the summand lists")
        parts = []
        for k, row in enumerate(entries):
            for l, e in enumerate(row):
                e = self._entry(rows[k], cols[l], e)
                if e is None:
                    continue
                parts.append(self.chain(S.projections[k], e, T.injections[l]))
        return self.total(S.obj, T.obj, parts)

    def _entry(self, R: Obj, C: Obj, e: Mor | int | None) -> Mor | None:
        if e is None or (isinstance(e, int) and e == 0):
            return None
        if isinstance(e, int):
            if R != C:
                raise IllTypedError("integer block entry needs equal row and column objects")
            return self.scale(self.identity(R), e)
        if self.dom(e) != R or self.cod(e) != C:
            raise IllTypedError("block entry has the wrong domain or codomain")
        return e


@dataclass(frozen=True)
class OpRealization:
    """The opposite of a category realised inside a concrete category.

    ``obj`` and ``mor`` send objects and morphisms of the source category to
    those of ``category``; a morphism ``A -> B`` goes to ``obj(B) -> obj(A)``.
    """

    category: AdditiveCategory
    obj: Callable[[Obj], Obj]
    mor: Callable[[Mor], Mor]


class AbelianCategory(AdditiveCategory):
    """Additive category with chosen kernels, cokernels and images."""

    name = "abelian category"

    def kernel(self, m: Mor) -> tuple[Obj, Mor]:
        raise NotImplementedError

    def cokernel(self, m: Mor) -> tuple[Obj, Mor]:
        raise NotImplementedError

    def image(self, m: Mor) -> tuple[Obj, Mor, Mor]:
        """``(I, p, i)`` with ``p`` epi, ``i`` mono and ``p . i == m``."""
        raise NotImplementedError

    def factor_through_kernel(self, g: Mor, m: Mor) -> Mor:
        _, k = self.kernel(m)
        u = self.lift(g, k)
        if u is None:
            raise PreconditionError("morphism does not compose to zero with the given one")
        return u

    def factor_through_cokernel(self, g: Mor, m: Mor) -> Mor:
        _, c = self.cokernel(m)
        u = self.descend(c, g)
        if u is None:
            raise PreconditionError("morphism does not compose to zero with the given one")
        return u

    def is_mono(self, m: Mor) -> bool:
        K, _ = self.kernel(m)
        return self.is_zero_object(K)

    def is_epi(self, m: Mor) -> bool:
        C, _ = self.cokernel(m)
        return self.is_zero_object(C)


# ---------------------------------------------------------------------------
# functors and transformations


@dataclass(frozen=True)
class AdditiveFunctor:
    """An additive functor given by its object and morphism maps."""

    source: AdditiveCategory
    target: AdditiveCategory
    obj: Callable[[Obj], Obj]
    mor: Callable[[Mor], Mor]
    name: str = "F"

    def then(self, other: "AdditiveFunctor") -> "AdditiveFunctor":
        """The composite "self, then other"."""
        return AdditiveFunctor(self.source, other.target,
                               lambda X: other.obj(self.obj(X)),
                               lambda f: other.mor(self.mor(f)),
                               f"{other.name}{self.name}")


def identity_functor(cat: AdditiveCategory) -> AdditiveFunctor:
    return AdditiveFunctor(cat, cat, lambda X: X, lambda f: f, "1")


@dataclass(frozen=True)
class Transformation:
    """A transformation ``F => G`` given by its components ``X -> alpha_X``."""

    F: AdditiveFunctor
    G: AdditiveFunctor
    at: Callable[[Obj], Mor]
    name: str = "alpha"

    def then(self, other: "Transformation") -> "Transformation":
        """Vertical composite: ``(self . other)_X = self_X . other_X``."""
        tgt = self.F.target
        return Transformation(self.F, other.G,
                              lambda X: tgt.compose(self.at(X), other.at(X)),
                              f"{self.name}{other.name}")

    def star(self, other: "Transformation") -> "Transformation":
        """Horizontal composite ``other * self`` for ``self: F => G`` and ``other: K => L``.

        Components are ``K(self_X) . other_{G(X)}``.
        """
        tgt = other.F.target
        return Transformation(self.F.then(other.F), self.G.then(other.G),
                              lambda X: tgt.compose(other.F.mor(self.at(X)),
                                                    other.at(self.G.obj(X))),
                              f"{other.name}*{self.name}")


def identity_transformation(F: AdditiveFunctor) -> Transformation:
    return Transformation(F, F, lambda X: F.target.identity(F.obj(X)), "1")


def scalar_transformation(F: AdditiveFunctor, n: int) -> Transformation:
    """The endo-transformation ``n . 1_F``."""
    return Transformation(F, F, lambda X: F.target.scale(F.target.identity(F.obj(X)), n),
                          f"{n}")

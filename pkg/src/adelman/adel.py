"""The Adelman category of an additive category.

Objects are composable pairs ``X0 -x0-> X1 -x1-> X2`` of base morphisms and
morphisms are commuting triples ``[f0, f1, f2]``. Morphism values are
representatives: ``[f]`` is zero exactly when there are ``s: X1 -> Y0`` and
``t: X2 -> Y1`` with ``s . y0 + x1 . t == f1``, and every equality question
is decided by searching for such a pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .category import (AdditiveCategory, AdditiveFunctor, DirectSum, OpRealization,
                       Transformation)
from .errors import IllTypedError, NotInvertibleError, PreconditionError

Obj = Any
Mor = Any


@dataclass(frozen=True)
class AdelObject:
    """``X0 -x0-> X1 -x1-> X2``.

    ``layout`` optionally records the direct-summand decomposition of each
    slot produced by a block formula; it does not take part in equality.
    """

    X0: Obj
    X1: Obj
    X2: Obj
    x0: Mor
    x1: Mor
    layout: tuple | None = field(default=None, compare=False, repr=False)

    @property
    def slots(self) -> tuple:
        return self.X0, self.X1, self.X2


@dataclass(frozen=True)
class AdelMorphism:
    source: AdelObject
    target: AdelObject
    f0: Mor
    f1: Mor
    f2: Mor

    @property
    def components(self) -> tuple:
        return self.f0, self.f1, self.f2


@dataclass(frozen=True)
class HomotopyWitness:
    """``(s, t)`` with ``s . y0 + x1 . t == f1`` for the certified morphism."""

    s: Mor
    t: Mor


@dataclass(frozen=True)
class Factorization:
    """Kernel-cokernel factorisation ``f == p . If . i`` with ``If``, ``Jf`` inverse."""

    p: AdelMorphism
    If: AdelMorphism
    i: AdelMorphism
    Jf: AdelMorphism


@dataclass(frozen=True)
class Resolution:
    """``P -f-> Q -c-> A`` with ``P``, ``Q`` projective and ``c`` a cokernel of ``f``."""

    P: AdelObject
    f: AdelMorphism
    Q: AdelObject
    c: AdelMorphism


@dataclass(frozen=True)
class NullFactorization:
    """``f == g . h`` through the zero object ``middle``."""

    middle: AdelObject
    g: AdelMorphism
    h: AdelMorphism


class Adel(AdditiveCategory):
    """The Adelman category over a base additive-category capability."""

    def __init__(self, base: AdditiveCategory):
        self.base = base
        self.name = f"Adel({base.name})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Adel) and other.base is self.base

    def __hash__(self) -> int:
        return hash(("Adel", id(self.base)))

    # -- construction -----------------------------------------------------

    def make_object(self, x0: Mor, x1: Mor, layout: tuple | None = None) -> AdelObject:
        c = self.base
        if c.cod(x0) != c.dom(x1):
            raise IllTypedError("x0 and x1 are not composable")
        return AdelObject(c.dom(x0), c.cod(x0), c.cod(x1), x0, x1, layout)

    def make_morphism(self, A: AdelObject, B: AdelObject, f0: Mor, f1: Mor, f2: Mor,
                      check: bool = True) -> AdelMorphism:
        c = self.base
        for k, (f, X, Y) in enumerate(zip((f0, f1, f2), A.slots, B.slots)):
            if c.dom(f) != X or c.cod(f) != Y:
                raise IllTypedError(f"component f{k} has the wrong domain or codomain")
        if check:
            if not c.equal(c.compose(A.x0, f1), c.compose(f0, B.x0)):
                raise IllTypedError("first square does not commute: x0.f1 != f0.y0")
            if not c.equal(c.compose(A.x1, f2), c.compose(f1, B.x1)):
                raise IllTypedError("second square does not commute: x1.f2 != f1.y1")
        return AdelMorphism(A, B, f0, f1, f2)

    def include(self, X: Obj) -> AdelObject:
        """``I(X) = (0 -> X -> 0)``."""
        c = self.base
        O = c.zero_object()
        return AdelObject(O, X, O, c.zero(O, X), c.zero(X, O))

    def include_morphism(self, f: Mor) -> AdelMorphism:
        c = self.base
        A, B = self.include(c.dom(f)), self.include(c.cod(f))
        O = c.zero_object()
        return AdelMorphism(A, B, c.zero(O, O), f, c.zero(O, O))

    # -- additive structure -----------------------------------------------

    def dom(self, f: AdelMorphism) -> AdelObject:
        return f.source

    def cod(self, f: AdelMorphism) -> AdelObject:
        return f.target

    def compose(self, f: AdelMorphism, g: AdelMorphism) -> AdelMorphism:
        if f.target != g.source:
            raise IllTypedError("morphisms are not composable")
        c = self.base
        return AdelMorphism(f.source, g.target, *(c.compose(a, b)
                                                  for a, b in zip(f.components, g.components)))

    def _parallel(self, f: AdelMorphism, g: AdelMorphism) -> None:
        if f.source != g.source or f.target != g.target:
            raise IllTypedError("morphisms do not share source and target")

    def add(self, f: AdelMorphism, g: AdelMorphism) -> AdelMorphism:
        self._parallel(f, g)
        c = self.base
        return AdelMorphism(f.source, f.target, *(c.add(a, b)
                                                  for a, b in zip(f.components, g.components)))

    def neg(self, f: AdelMorphism) -> AdelMorphism:
        c = self.base
        return AdelMorphism(f.source, f.target, *(c.neg(a) for a in f.components))

    def scale(self, f: AdelMorphism, n: int) -> AdelMorphism:
        c = self.base
        return AdelMorphism(f.source, f.target, *(c.scale(a, n) for a in f.components))

    def zero(self, A: AdelObject, B: AdelObject) -> AdelMorphism:
        c = self.base
        return AdelMorphism(A, B, *(c.zero(X, Y) for X, Y in zip(A.slots, B.slots)))

    def identity(self, A: AdelObject) -> AdelMorphism:
        c = self.base
        return AdelMorphism(A, A, *(c.identity(X) for X in A.slots))

    def zero_object(self) -> AdelObject:
        return self.include(self.base.zero_object())

    def _direct_sum(self, objects: Sequence[AdelObject]) -> DirectSum:
        c = self.base
        sums = [c.direct_sum([A.slots[k] for A in objects]) for k in range(3)]
        n = len(objects)
        diag = lambda k, m: c.matrix([A.slots[k] for A in objects],
                                     [A.slots[k + 1] for A in objects],
                                     [[m(A) if i == j else None for j in range(n)]
                                      for i, A in enumerate(objects)])
        S = AdelObject(sums[0].obj, sums[1].obj, sums[2].obj,
                       diag(0, lambda A: A.x0), diag(1, lambda A: A.x1),
                       tuple(tuple(A.slots[k] for A in objects) for k in range(3)))
        inj = tuple(AdelMorphism(A, S, *(sums[k].injections[i] for k in range(3)))
                    for i, A in enumerate(objects))
        proj = tuple(AdelMorphism(S, A, *(sums[k].projections[i] for k in range(3)))
                     for i, A in enumerate(objects))
        return DirectSum(S, tuple(objects), inj, proj)

    def matrix(self, rows, cols, entries) -> AdelMorphism:
        c = self.base
        S = self.direct_sum(rows).obj
        T = self.direct_sum(cols).obj
        comps = []
        for k in range(3):
            block = []
            for R, row in zip(rows, entries):
                line = []
                for C, e in zip(cols, row):
                    e = self._entry(R, C, e)
                    line.append(None if e is None else e.components[k])
                block.append(line)
            comps.append(c.matrix([R.slots[k] for R in rows], [C.slots[k] for C in cols], block))
        return AdelMorphism(S, T, *comps)

    # -- equality ---------------------------------------------------------

    def is_zero_morphism(self, f: AdelMorphism) -> HomotopyWitness | None:
        """A null-homotopy of ``f``, or ``None`` if ``[f] != 0``."""
        sol = self.base.solve_homotopy(f.source.x1, f.target.x0, f.f1)
        return None if sol is None else HomotopyWitness(*sol)

    def equal(self, f: AdelMorphism, g: AdelMorphism) -> bool:
        self._parallel(f, g)
        return self.is_zero_morphism(self.sub(f, g)) is not None

    morphisms_equal = equal

    def is_zero(self, f: AdelMorphism) -> bool:
        return self.is_zero_morphism(f) is not None

    def zero_object_witness(self, A: AdelObject) -> HomotopyWitness | None:
        """``(s, t)`` with ``s . a0 + a1 . t == 1`` if ``A`` is a zero object."""
        return self.is_zero_morphism(self.identity(A))

    def is_zero_object(self, A: AdelObject) -> bool:
        return self.zero_object_witness(A) is not None

    def solve_system(self, unknowns, equations):
        raise NotImplementedError("general equation solving is not provided in Adel")

    def lift(self, g, m):
        raise NotImplementedError("use factor_through_kernel")

    def descend(self, e, g):
        raise NotImplementedError("use factor_through_cokernel")

    def inverse(self, f: AdelMorphism) -> AdelMorphism:
        """An inverse of an isomorphism, read off its kernel-cokernel factorisation."""
        if not self.is_iso(f):
            raise NotInvertibleError("morphism is not an isomorphism in Adel")
        # f mono: k(f) == 0, so 1_A descends along p = c(k(f)); dually for i.
        _, k = self.kernel(f)
        _, cf = self.cokernel(f)
        fac = self.kernel_cokernel_factorization(f)
        q = self.factor_through_cokernel(self.identity(f.source), k)
        j = self.factor_through_kernel(self.identity(f.target), cf)
        return self.chain(j, fac.Jf, q)

    # -- kernels and cokernels --------------------------------------------

    def kernel(self, f: AdelMorphism) -> tuple[AdelObject, AdelMorphism]:
        """``K(f) = (A0+B0 -> A1+B0 -> A2+B1)`` with ``k(f)`` the first injections."""
        c = self.base
        A, B = f.source, f.target
        x0 = c.matrix([A.X0, B.X0], [A.X1, B.X0], [[A.x0, None], [None, 1]])
        x1 = c.matrix([A.X1, B.X0], [A.X2, B.X1], [[A.x1, f.f1], [None, c.neg(B.x0)]])
        K = self.make_object(x0, x1, ((A.X0, B.X0), (A.X1, B.X0), (A.X2, B.X1)))
        k = AdelMorphism(K, A,
                         c.matrix([A.X0, B.X0], [A.X0], [[1], [None]]),
                         c.matrix([A.X1, B.X0], [A.X1], [[1], [None]]),
                         c.matrix([A.X2, B.X1], [A.X2], [[1], [None]]))
        return K, k

    def cokernel(self, f: AdelMorphism) -> tuple[AdelObject, AdelMorphism]:
        """``C(f) = (B0+A1 -> B1+A2 -> B2+A2)`` with ``c(f)`` the first projections."""
        c = self.base
        A, B = f.source, f.target
        x0 = c.matrix([B.X0, A.X1], [B.X1, A.X2], [[B.x0, None], [f.f1, c.neg(A.x1)]])
        x1 = c.matrix([B.X1, A.X2], [B.X2, A.X2], [[B.x1, None], [None, 1]])
        C = self.make_object(x0, x1, ((B.X0, A.X1), (B.X1, A.X2), (B.X2, A.X2)))
        cf = AdelMorphism(B, C,
                          c.matrix([B.X0], [B.X0, A.X1], [[1, None]]),
                          c.matrix([B.X1], [B.X1, A.X2], [[1, None]]),
                          c.matrix([B.X2], [B.X2, A.X2], [[1, None]]))
        return C, cf

    def factor_through_kernel(self, g: AdelMorphism, f: AdelMorphism) -> AdelMorphism:
        """The ``u`` with ``u . k(f) == g``; requires ``g . f == 0``."""
        c = self.base
        w = self.is_zero_morphism(self.compose(g, f))
        if w is None:
            raise PreconditionError("g . f is not zero in Adel: no null-homotopy exists")
        C, A, B = g.source, f.source, f.target
        K, _ = self.kernel(f)
        u0 = c.matrix([C.X0], [A.X0, B.X0], [[g.f0, c.compose(C.x0, w.s)]])
        u1 = c.matrix([C.X1], [A.X1, B.X0], [[g.f1, w.s]])
        u2 = c.matrix([C.X2], [A.X2, B.X1], [[g.f2, w.t]])
        return AdelMorphism(C, K, u0, u1, u2)

    def factor_through_cokernel(self, g: AdelMorphism, f: AdelMorphism) -> AdelMorphism:
        """The ``u`` with ``c(f) . u == g``; requires ``f . g == 0``."""
        c = self.base
        w = self.is_zero_morphism(self.compose(f, g))
        if w is None:
            raise PreconditionError("f . g is not zero in Adel: no null-homotopy exists")
        A, B, D = f.source, f.target, g.target
        C, _ = self.cokernel(f)
        u0 = c.matrix([B.X0, A.X1], [D.X0], [[g.f0], [w.s]])
        u1 = c.matrix([B.X1, A.X2], [D.X1], [[g.f1], [w.t]])
        u2 = c.matrix([B.X2, A.X2], [D.X2], [[g.f2], [c.compose(w.t, D.x1)]])
        return AdelMorphism(C, D, u0, u1, u2)

    # -- mono / epi / iso -------------------------------------------------

    def mono_witness(self, f: AdelMorphism):
        """``(s, t, u, v)`` with ``s.a0 + a1.u + f1.v == 1`` and ``t.a0 == b0.v``, or ``None``."""
        c = self.base
        A, B = f.source, f.target
        one = c.identity
        return c.solve_system(
            [(A.X1, A.X0), (B.X0, A.X0), (A.X2, A.X1), (B.X1, A.X1)],
            [([(0, one(A.X1), A.x0), (2, A.x1, one(A.X1)), (3, f.f1, one(A.X1))], one(A.X1)),
             ([(1, one(B.X0), A.x0), (3, c.neg(B.x0), one(A.X1))], c.zero(B.X0, A.X1))],
        )

    def epi_witness(self, f: AdelMorphism):
        """``(s, t, u, v)`` with ``s.b0 + t.f1 + b1.u == 1`` and ``t.a1 == b1.v``, or ``None``."""
        c = self.base
        A, B = f.source, f.target
        one = c.identity
        return c.solve_system(
            [(B.X1, B.X0), (B.X1, A.X1), (B.X2, B.X1), (B.X2, A.X2)],
            [([(0, one(B.X1), B.x0), (1, one(B.X1), f.f1), (2, B.x1, one(B.X1))], one(B.X1)),
             ([(1, one(B.X1), A.x1), (3, c.neg(B.x1), one(A.X2))], c.zero(B.X1, A.X2))],
        )

    def is_mono(self, f: AdelMorphism) -> bool:
        _, k = self.kernel(f)
        return self.is_zero(k)

    def is_epi(self, f: AdelMorphism) -> bool:
        _, cf = self.cokernel(f)
        return self.is_zero(cf)

    def is_iso(self, f: AdelMorphism) -> bool:
        return self.is_mono(f) and self.is_epi(f)

    # -- factorisation ----------------------------------------------------

    def _reassociation(self, X: Obj, Y: Obj, Z: Obj):
        """Base iso ``X+(Y+Z) -> X+Y+Z`` and its inverse."""
        c = self.base
        YZ = c.direct_sum([Y, Z])
        nested = c.direct_sum([X, YZ.obj]).obj
        flat = c.direct_sum([X, Y, Z]).obj
        if nested == flat:
            one = c.identity(flat)
            return one, one
        fwd = c.matrix([X, YZ.obj], [X, Y, Z], [[1, None, None], [None, *YZ.projections]])
        bwd = c.matrix([X, Y, Z], [X, YZ.obj], [[1, None], [None, YZ.injections[0]],
                                                [None, YZ.injections[1]]])
        return fwd, bwd

    def kernel_cokernel_factorization(self, f: AdelMorphism) -> Factorization:
        """``f == p . If . i`` with ``p = c(k(f))``, ``i = k(c(f))`` and ``Jf`` inverse to ``If``."""
        c = self.base
        A, B = f.source, f.target
        a0, a1, b0, b1 = A.x0, A.x1, B.x0, B.x1
        f0, f1, f2 = f.components
        K, k = self.kernel(f)
        Cn, p = self.cokernel(k)
        Cc, cc = self.cokernel(f)
        Kn, i = self.kernel(cc)

        # flattened objects and the two block morphisms between them
        r0 = [A.X0, A.X1, B.X0]
        r1 = [A.X1, A.X2, B.X1]
        r2 = [A.X2, A.X2, B.X1]
        s0 = [B.X0, B.X0, A.X1]
        s1 = [B.X1, B.X0, A.X1]
        s2 = [B.X2, B.X1, A.X2]
        M = c.matrix
        Cf = self.make_object(
            M(r0, r1, [[a0, None, None], [1, c.neg(a1), c.neg(f1)], [None, None, b0]]),
            M(r1, r2, [[a1, None, None], [None, 1, None], [None, None, 1]]))
        Kf = self.make_object(
            M(s0, s1, [[b0, None, None], [None, 1, None], [None, None, 1]]),
            M(s1, s2, [[b1, 1, None], [None, c.neg(b0), None], [None, c.neg(f1), a1]]))
        If_flat = AdelMorphism(
            Cf, Kf,
            M(r0, s0, [[f0, None, a0], [None, None, 1], [1, None, None]]),
            M(r1, s1, [[f1, None, 1], [None, None, None], [1, None, None]]),
            M(r2, s2, [[f2, None, 1], [None, None, None], [b1, 1, None]]))
        Jf_flat = AdelMorphism(
            Kf, Cf,
            M(s0, r0, [[None, None, 1], [None, None, -1], [None, 1, None]]),
            M(s1, r1, [[None, None, 1], [None, None, c.neg(b0)], [1, c.neg(a1), c.neg(f1)]]),
            M(s2, r2, [[None, None, None], [None, None, 1], [1, -1, None]]))

        if Cn == Cf and Kn == Kf:
            If, Jf = If_flat, Jf_flat
        else:
            # C(k(f)) has slots Y+(X+Z); K(c(f)) has slots Y+(Y'+Z')
            rc = [self._reassociation(rs[0], rs[1], rs[2]) for rs in (r0, r1, r2)]
            rk = [self._reassociation(ss[0], ss[1], ss[2]) for ss in (s0, s1, s2)]
            to_Cf = AdelMorphism(Cn, Cf, *(r[0] for r in rc))
            from_Cf = AdelMorphism(Cf, Cn, *(r[1] for r in rc))
            to_Kf = AdelMorphism(Kn, Kf, *(r[0] for r in rk))
            from_Kf = AdelMorphism(Kf, Kn, *(r[1] for r in rk))
            If = self.chain(to_Cf, If_flat, from_Kf)
            Jf = self.chain(to_Kf, Jf_flat, from_Cf)
        return Factorization(p, If, i, Jf)

    # -- isomorphic transport and pruning ---------------------------------

    def transport_iso(self, A: AdelObject, phi0: Mor, phi1: Mor, phi2: Mor,
                      inverses: Sequence[Mor] | None = None
                      ) -> tuple[AdelObject, AdelMorphism, AdelMorphism]:
        """Move ``A`` along base isomorphisms; returns ``(B, iso, inverse)``."""
        c = self.base
        phis = (phi0, phi1, phi2)
        for k, (phi, X) in enumerate(zip(phis, A.slots)):
            if c.dom(phi) != X:
                raise IllTypedError(f"phi{k} does not start at slot {k}")
        if inverses is None:
            inv = [c.inverse(phi) for phi in phis]
        else:
            inv = list(inverses)
            for phi, psi in zip(phis, inv):
                if not (c.equal(c.compose(phi, psi), c.identity(c.dom(phi)))
                        and c.equal(c.compose(psi, phi), c.identity(c.cod(phi)))):
                    raise NotInvertibleError("supplied inverse is not two-sided")
        B = self.make_object(c.chain(inv[0], A.x0, phi1), c.chain(inv[1], A.x1, phi2))
        return B, AdelMorphism(A, B, *phis), AdelMorphism(B, A, *inv)

    def simplify(self, A: AdelObject) -> tuple[AdelObject, AdelMorphism, AdelMorphism]:
        """Drop direct summands that are zero objects of the base.

        Uses the recorded ``layout``; returns ``(B, iso, inverse)``. Objects
        without a layout are returned unchanged.
        """
        c = self.base
        if A.layout is None:
            one = self.identity(A)
            return A, one, one
        phis, invs, layout = [], [], []
        for summands in A.layout:
            rows = list(summands)
            live = [not c.is_zero_object(X) for X in rows]
            keep = [X for X, ok in zip(rows, live) if ok]
            ent, j = [], 0
            for ok in live:
                line = [None] * len(keep)
                if ok:
                    line[j] = 1
                    j += 1
                ent.append(line)
            phis.append(c.matrix(rows, keep, ent))
            invs.append(c.matrix(keep, rows, [list(col) for col in zip(*ent)]))
            layout.append(tuple(keep))
        B, iso, inv = self.transport_iso(A, *phis, inverses=invs)
        B = AdelObject(B.X0, B.X1, B.X2, B.x0, B.x1, tuple(layout))
        return B, AdelMorphism(A, B, *iso.components), AdelMorphism(B, A, *inv.components)

    # -- duality ----------------------------------------------------------

    def op_adel(self) -> "Adel":
        opr = self._op()
        return Adel(opr.category)

    def _op(self) -> OpRealization:
        opr = self.base.op()
        if opr is None:
            raise IllTypedError(f"{self.base.name} has no realisation of its opposite")
        return opr

    def dualize(self, A: AdelObject) -> AdelObject:
        """``D(A) = (A2 -> A1 -> A0)`` with the opposite morphisms."""
        opr = self._op()
        layout = None
        if A.layout is not None:
            layout = tuple(tuple(opr.obj(X) for X in s) for s in reversed(A.layout))
        return AdelObject(opr.obj(A.X2), opr.obj(A.X1), opr.obj(A.X0),
                          opr.mor(A.x1), opr.mor(A.x0), layout)

    def dualize_morphism(self, f: AdelMorphism) -> AdelMorphism:
        """``D([f]) = [f2, f1, f0]`` (opposites) from ``D(target)`` to ``D(source)``."""
        opr = self._op()
        return AdelMorphism(self.dualize(f.target), self.dualize(f.source),
                            opr.mor(f.f2), opr.mor(f.f1), opr.mor(f.f0))

    # -- projectives, injectives and resolutions --------------------------

    def projective_cover(self, A: AdelObject) -> tuple[AdelObject, AdelMorphism]:
        """``P = (0 -> A1 -> A2)`` with the epimorphism ``[0, 1, 1]: P -> A``."""
        c = self.base
        O = c.zero_object()
        P = AdelObject(O, A.X1, A.X2, c.zero(O, A.X1), A.x1)
        return P, AdelMorphism(P, A, c.zero(O, A.X0), c.identity(A.X1), c.identity(A.X2))

    def injective_envelope(self, A: AdelObject) -> tuple[AdelMorphism, AdelObject]:
        """The monomorphism ``[1, 1, 0]: A -> (A0 -> A1 -> 0)``."""
        c = self.base
        O = c.zero_object()
        J = AdelObject(A.X0, A.X1, O, A.x0, c.zero(A.X1, O))
        return AdelMorphism(A, J, c.identity(A.X0), c.identity(A.X1), c.zero(A.X2, O)), J

    def projective_resolution(self, A: AdelObject) -> Resolution:
        Q, cA = self.projective_cover(A)
        K, k = self.kernel(cA)
        P, e = self.projective_cover(K)
        return Resolution(P, self.compose(e, k), Q, cA)

    # -- zero morphisms factor through zero objects -----------------------

    def null_factorization(self, f: AdelMorphism) -> NullFactorization:
        """Factor a zero morphism as ``g . h`` through ``N + S``.

        ``N = (A0 -a0a1-> A2 -1-> A2)`` and ``S = (A1 -1-> A1 -a1-> A2)``; the
        composite equals ``f`` on the nose.
        """
        c = self.base
        w = self.is_zero_morphism(f)
        if w is None:
            raise PreconditionError("morphism is not zero in Adel: no null-homotopy exists")
        A, B = f.source, f.target
        a0, a1, b0, b1 = A.x0, A.x1, B.x0, B.x1
        s, t = w.s, w.t
        M = c.matrix
        mid = self.make_object(
            M([A.X0, A.X1], [A.X2, A.X1], [[c.compose(a0, a1), None], [None, 1]]),
            M([A.X2, A.X1], [A.X2, A.X2], [[1, None], [None, a1]]),
            ((A.X0, A.X1), (A.X2, A.X1), (A.X2, A.X2)))
        g = AdelMorphism(A, mid,
                         M([A.X0], [A.X0, A.X1], [[1, a0]]),
                         M([A.X1], [A.X2, A.X1], [[a1, 1]]),
                         M([A.X2], [A.X2, A.X2], [[1, 1]]))
        tb1 = c.compose(t, b1)
        h = AdelMorphism(mid, B,
                         M([A.X0, A.X1], [B.X0], [[c.sub(f.f0, c.compose(a0, s))], [s]]),
                         M([A.X2, A.X1], [B.X1], [[t], [c.compose(s, b0)]]),
                         M([A.X2, A.X2], [B.X2], [[tb1], [c.sub(f.f2, tb1)]]))
        return NullFactorization(mid, g, h)

    def s_object(self, s: Mor, second: bool = False) -> AdelObject:
        """Zero objects ``(X -1-> X -s-> Y)`` or, with ``second``, ``(X -s-> Y -1-> Y)``."""
        c = self.base
        if second:
            return self.make_object(s, c.identity(c.cod(s)))
        return self.make_object(c.identity(c.dom(s)), s)


# ---------------------------------------------------------------------------
# lifting functors and transformations


def apply_adel_functor(F: AdditiveFunctor, x: AdelObject | AdelMorphism):
    """``Adel(F)`` applied componentwise to an object or a morphism."""
    if isinstance(x, AdelObject):
        return AdelObject(F.obj(x.X0), F.obj(x.X1), F.obj(x.X2), F.mor(x.x0), F.mor(x.x1))
    if isinstance(x, AdelMorphism):
        return AdelMorphism(apply_adel_functor(F, x.source), apply_adel_functor(F, x.target),
                            *(F.mor(g) for g in x.components))
    raise IllTypedError("expected an AdelObject or AdelMorphism")


def adel_functor(F: AdditiveFunctor, source: Adel | None = None,
                 target: Adel | None = None) -> AdditiveFunctor:
    """``Adel(F)`` as an additive functor between Adelman categories."""
    return AdditiveFunctor(source or Adel(F.source), target or Adel(F.target),
                           lambda X: apply_adel_functor(F, X),
                           lambda f: apply_adel_functor(F, f), f"Adel({F.name})")


def adel_transformation(alpha: Transformation, X: AdelObject) -> AdelMorphism:
    """``Adel(alpha)_X = [alpha_X0, alpha_X1, alpha_X2]``."""
    return AdelMorphism(apply_adel_functor(alpha.F, X), apply_adel_functor(alpha.G, X),
                        alpha.at(X.X0), alpha.at(X.X1), alpha.at(X.X2))


def adel_transformation_of(alpha: Transformation, source: Adel | None = None,
                           target: Adel | None = None) -> Transformation:
    return Transformation(adel_functor(alpha.F, source, target),
                          adel_functor(alpha.G, source, target),
                          lambda X: adel_transformation(alpha, X), f"Adel({alpha.name})")


def epsilon(F: AdditiveFunctor, S: Any) -> AdelMorphism:
    """``[0, 1, 0]: I(F(S)) -> Adel(F)(I(S))``."""
    src, tgt = F.source, F.target
    AS = Adel(src).include(S)
    left = Adel(tgt).include(F.obj(S))
    right = apply_adel_functor(F, AS)
    return AdelMorphism(left, right, tgt.zero(left.X0, right.X0),
                        tgt.identity(F.obj(S)), tgt.zero(left.X2, right.X2))

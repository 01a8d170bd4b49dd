"""The homology functor from an Adelman category over an abelian category.

For ``A = (A0 -a0-> A1 -a1-> A2)`` the homology is an image of the
composite of a kernel of ``a1`` with a cokernel of ``a0``. The choices are
fixed once per object (identities whenever the relevant end is a zero
object) and memoised, so repeated calls agree.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Any

from .adel import Adel, AdelMorphism, AdelObject, adel_transformation, apply_adel_functor
from .category import AbelianCategory, AdditiveFunctor, Transformation
from .errors import PreconditionError

Obj = Any
Mor = Any


@dataclass(frozen=True)
class HomologyData:
    K: Obj
    k: Mor
    C: Obj
    c: Mor
    Im: Obj
    p: Mor
    i: Mor


class Homology:
    """``H`` for one abelian base category, with a per-object choice cache."""

    def __init__(self, base: AbelianCategory):
        self.base = base
        self.adel = Adel(base)
        self._cache: dict[AdelObject, HomologyData] = {}
        self._lock = threading.Lock()

    def data(self, A: AdelObject) -> HomologyData:
        with self._lock:
            hit = self._cache.get(A)
        if hit is not None:
            return hit
        d = self._compute(A)
        with self._lock:
            # first writer wins; later computations are discarded
            return self._cache.setdefault(A, d)

    def _compute(self, A: AdelObject) -> HomologyData:
        b = self.base
        zero0, zero2 = b.is_zero_object(A.X0), b.is_zero_object(A.X2)
        if zero2:
            K, k = A.X1, b.identity(A.X1)
        else:
            K, k = b.kernel(A.x1)
        if zero0:
            C, c = A.X1, b.identity(A.X1)
        else:
            C, c = b.cokernel(A.x0)
        if zero0 and zero2:
            one = b.identity(A.X1)
            return HomologyData(K, k, C, c, A.X1, one, one)
        Im, p, i = b.image(b.compose(k, c))
        return HomologyData(K, k, C, c, Im, p, i)

    def obj(self, A: AdelObject) -> Obj:
        return self.data(A).Im

    def mor(self, f: AdelMorphism) -> Mor:
        """The induced morphism between images."""
        b = self.base
        dA, dB = self.data(f.source), self.data(f.target)
        fK = b.lift(b.compose(dA.k, f.f1), dB.k)
        if fK is None:
            raise PreconditionError("kernel morphism does not lift; input is not a morphism")
        h = b.descend(dA.p, b.compose(fK, dB.p))
        if h is None:
            raise PreconditionError("image morphism does not descend; input is not a morphism")
        return h

    def functor(self) -> AdditiveFunctor:
        return AdditiveFunctor(self.adel, self.base, self.obj, self.mor, "H")

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()


_instances: dict[int, Homology] = {}
_instances_lock = threading.Lock()


def homology_for(base: AbelianCategory) -> Homology:
    """The shared homology functor (and choice cache) of ``base``."""
    with _instances_lock:
        h = _instances.get(id(base))
        if h is None or h.base is not base:
            h = _instances[id(base)] = Homology(base)
        return h


def homology_data(A: AdelObject, base: AbelianCategory) -> HomologyData:
    return homology_for(base).data(A)


def homology_object(A: AdelObject, base: AbelianCategory) -> Obj:
    return homology_for(base).obj(A)


def homology_morphism(f: AdelMorphism, base: AbelianCategory) -> Mor:
    return homology_for(base).mor(f)


def hat_functor(F: AdditiveFunctor, x: AdelObject | AdelMorphism):
    """``F^ = H . Adel(F)`` on an object or a morphism of ``Adel(source)``."""
    H = homology_for(F.target)
    y = apply_adel_functor(F, x)
    return H.obj(y) if isinstance(y, AdelObject) else H.mor(y)


def hat_transformation(alpha: Transformation, X: AdelObject) -> Mor:
    """``alpha^_X = H(Adel(alpha)_X)``."""
    return homology_for(alpha.F.target).mor(adel_transformation(alpha, X))

"""Randomised invariant audits.

Every suite draws its instances from a seeded :class:`random.Random`, so a
run is reproducible from ``(seed, count)``. Suites never stop at the first
failure; they count passes and failures per named check.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import linalg
from .adel import Adel, AdelMorphism, AdelObject
from .errors import AdelmanError
from .homology import hat_functor, homology_for
from .linalg import ZMatrix
from .zfree import FreeMorphism, FreeObject, zfree_capability
from .zmod import E, GroupMorphism, PresentedGroup, zmod_capability

DEFAULT_SEED = 0xADE1

ZF = zfree_capability()
ZM = zmod_capability()
ADEL = Adel(ZF)


# ---------------------------------------------------------------------------
# reports


@dataclass
class SuiteReport:
    name: str
    seed: int
    cases: int = 0
    seconds: float = 0.0
    checks: dict[str, list[int]] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def record(self, check: str, ok: bool, detail: str = "") -> None:
        slot = self.checks.setdefault(check, [0, 0])
        slot[0 if ok else 1] += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(f"{check}: {detail}" if detail else check)

    @property
    def passed(self) -> int:
        return sum(p for p, _ in self.checks.values())

    @property
    def failed(self) -> int:
        return sum(f for _, f in self.checks.values())

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.cases > 0

    def to_dict(self) -> dict:
        return {"suite": self.name, "seed": self.seed, "cases": self.cases,
                "passed": self.passed, "failed": self.failed,
                "seconds": round(self.seconds, 3),
                "checks": {k: {"passed": p, "failed": f} for k, (p, f) in self.checks.items()},
                "failures": list(self.failures)}


def _run_check(report: SuiteReport, name: str, fn: Callable[[], bool], detail: str = "") -> None:
    try:
        ok = bool(fn())
    except AdelmanError as exc:
        ok, detail = False, f"{detail} raised {type(exc).__name__}: {exc}"
    report.record(name, ok, detail)


# ---------------------------------------------------------------------------
# random instances


class Sampler:
    """Random matrices, objects and morphisms for the audits."""

    def __init__(self, seed: int, max_rank: int = 3, bound: int = 4):
        self.rng = random.Random(seed)
        self.max_rank = max_rank
        self.bound = bound

    def int(self, bound: int | None = None) -> int:
        b = self.bound if bound is None else bound
        return self.rng.randint(-b, b)

    def matrix(self, rows: int, cols: int, bound: int | None = None) -> ZMatrix:
        return ZMatrix([[self.int(bound) for _ in range(cols)] for _ in range(rows)], rows, cols)

    def rank(self, low: int = 0) -> int:
        return self.rng.randint(low, self.max_rank)

    def free_morphism(self, A: FreeObject, B: FreeObject) -> FreeMorphism:
        return FreeMorphism(A, B, self.matrix(A.rank, B.rank))

    def sparse_matrix(self, rows: int, cols: int) -> ZMatrix:
        """Mostly zero entries and no units, so that quotients stay non-trivial."""
        pool = (0, 0, 0, 2, -2, 3, -3, 4, -4)
        b = self.bound
        return ZMatrix([[self.rng.choice([x for x in pool if abs(x) <= b]) for _ in range(cols)]
                        for _ in range(rows)], rows, cols)

    def adel_object(self) -> AdelObject:
        """Uniformly random pairs mixed with sparse pairs and pairs with ``x0 . x1 == 0``."""
        X0, X1, X2 = FreeObject(self.rank()), FreeObject(self.rank(1)), FreeObject(self.rank())
        kind = self.rng.randrange(3)
        if kind == 0:
            x0, x1 = self.free_morphism(X0, X1), self.free_morphism(X1, X2)
        elif kind == 1:
            x0 = FreeMorphism(X0, X1, self.sparse_matrix(X0.rank, X1.rank))
            x1 = FreeMorphism(X1, X2, self.sparse_matrix(X1.rank, X2.rank))
        else:
            x0 = FreeMorphism(X0, X1, self.sparse_matrix(X0.rank, X1.rank))
            # columns of x1 drawn from the right kernel of x0
            R = linalg.kernel_basis(x0.mat.T)
            cols = [self.combination(R, 1) for _ in range(X2.rank)]
            M = ZMatrix([[cols[j][i] for j in range(X2.rank)] for i in range(X1.rank)],
                        X1.rank, X2.rank)
            x1 = FreeMorphism(X1, X2, M)
        return ADEL.make_object(x0, x1)

    def combination(self, basis: ZMatrix, bound: int = 2) -> tuple[int, ...]:
        if basis.rows == 0:
            return (0,) * basis.cols
        coeffs = ZMatrix([[self.int(bound) for _ in range(basis.rows)]], 1, basis.rows)
        return (coeffs @ basis).row(0)

    def adel_morphism(self, A: AdelObject, B: AdelObject) -> AdelMorphism:
        """A random natural triple ``A -> B`` (a combination of a lattice basis)."""
        basis = natural_basis(A, B)
        flat = self.combination(basis)
        shapes = [(X.rank, Y.rank) for X, Y in zip(A.slots, B.slots)]
        comps, pos = [], 0
        for (r, c), X, Y in zip(shapes, A.slots, B.slots):
            M = ZMatrix([flat[pos + i * c: pos + (i + 1) * c] for i in range(r)], r, c)
            comps.append(FreeMorphism(X, Y, M))
            pos += r * c
        return ADEL.make_morphism(A, B, *comps)

    def test_morphism(self) -> AdelMorphism:
        """A random morphism of one of several shapes.

        Plain random triples are mostly zero in Adel, so endomorphisms
        ``n . 1 + r`` and kernel/cokernel maps of random morphisms are mixed in.
        """
        kind = self.rng.randrange(4)
        A = self.adel_object()
        if kind == 0:
            return self.adel_morphism(A, self.adel_object())
        if kind == 1:
            n = self.rng.choice((1, -1, 2, 3))
            return ADEL.add(ADEL.scale(ADEL.identity(A), n), self.adel_morphism(A, A))
        g = self.adel_morphism(A, self.adel_object())
        return ADEL.kernel(g)[1] if kind == 2 else ADEL.cokernel(g)[1]

    def zero_object(self) -> AdelObject:
        """A random object of one of the two shapes ``(X -1-> X -s-> Y)``, ``(X -s-> Y -1-> Y)``."""
        X, Y = FreeObject(self.rank()), FreeObject(self.rank())
        return ADEL.s_object(self.free_morphism(X, Y), second=self.rng.random() < 0.5)

    def null_morphism(self, A: AdelObject, B: AdelObject) -> AdelMorphism:
        """A random morphism that factors through a zero object."""
        Z = self.zero_object()
        return ADEL.compose(self.adel_morphism(A, Z), self.adel_morphism(Z, B))

    # presented groups

    def group(self, max_gens: int = 3, max_rels: int = 2) -> PresentedGroup:
        g = self.rng.randint(0, max_gens)
        r = self.rng.randint(0, max_rels)
        return PresentedGroup(g, self.matrix(r, g))

    def group_morphism(self, G: PresentedGroup, H: PresentedGroup) -> GroupMorphism:
        shapes = [(G.gens, H.gens), (G.rels.rows, H.rels.rows)]
        M = linalg.terms_matrix(shapes, [([(0, G.rels, ZMatrix.identity(H.gens)),
                                           (1, ZMatrix.identity(G.rels.rows), -H.rels)],
                                          (G.rels.rows, H.gens))])
        flat = self.combination(linalg.kernel_basis(M))
        X = ZMatrix([flat[i * H.gens:(i + 1) * H.gens] for i in range(G.gens)], G.gens, H.gens)
        off = G.gens * H.gens
        w = H.rels.rows
        W = ZMatrix([flat[off + i * w: off + (i + 1) * w] for i in range(G.rels.rows)],
                    G.rels.rows, w)
        return GroupMorphism(G, H, X, W)

    def unimodular(self, n: int, steps: int = 6) -> ZMatrix:
        a = [[int(i == j) for j in range(n)] for i in range(n)]
        for _ in range(steps if n > 1 else 0):
            i, j = self.rng.sample(range(n), 2)
            c = self.rng.choice((-2, -1, 1, 2))
            a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        if n and self.rng.random() < 0.5:
            a[0] = [-x for x in a[0]]
        return ZMatrix(a, n, n)


def natural_basis(A: AdelObject, B: AdelObject) -> ZMatrix:
    """Lattice basis of natural triples ``A -> B``, vectorised row-major."""
    I = ZMatrix.identity
    shapes = [(X.rank, Y.rank) for X, Y in zip(A.slots, B.slots)]
    eqs = [
        ([(1, A.x0.mat, I(B.X1.rank)), (0, I(A.X0.rank), -B.x0.mat)], (A.X0.rank, B.X1.rank)),
        ([(2, A.x1.mat, I(B.X2.rank)), (1, I(A.X1.rank), -B.x1.mat)], (A.X1.rank, B.X2.rank)),
    ]
    return linalg.kernel_basis(linalg.terms_matrix(shapes, eqs))


# ---------------------------------------------------------------------------
# Adelman suite


def adel_suite(seed: int = DEFAULT_SEED, count: int = 200) -> SuiteReport:
    """Category axioms and the kernel, cokernel, factorisation and duality identities."""
    rep = SuiteReport("adel", seed)
    smp = Sampler(seed)
    ad = ADEL
    eq = ad.equal
    start = time.perf_counter()
    for n in range(count):
        f = smp.test_morphism()
        A, B = f.source, f.target
        tag = f"case {n}"
        rep.cases += 1

        # category axioms and congruence
        C, D = smp.adel_object(), smp.adel_object()
        g, g2, h = smp.adel_morphism(B, C), smp.adel_morphism(B, C), smp.adel_morphism(C, D)
        _run_check(rep, "associativity",
                   lambda: ad.compose(ad.compose(f, g), h) == ad.compose(f, ad.compose(g, h)), tag)
        _run_check(rep, "identity laws",
                   lambda: ad.compose(ad.identity(A), f) == f == ad.compose(f, ad.identity(B)), tag)
        _run_check(rep, "bilinearity",
                   lambda: eq(ad.chain(f, ad.add(g, g2), h),
                              ad.add(ad.chain(f, g, h), ad.chain(f, g2, h))), tag)
        f_alt = ad.add(f, smp.null_morphism(A, B))
        g_alt = ad.add(g, smp.null_morphism(B, C))
        _run_check(rep, "congruence", lambda: eq(f, f_alt)
                   and eq(ad.compose(f, g), ad.compose(f_alt, g_alt)), tag)

        # kernels and cokernels
        K, k = ad.kernel(f)
        Cc, c = ad.cokernel(f)
        _run_check(rep, "k(f).f == 0", lambda: ad.is_zero(ad.compose(k, f)), tag)
        _run_check(rep, "f.c(f) == 0", lambda: ad.is_zero(ad.compose(f, c)), tag)

        X = smp.adel_object()
        u0 = smp.adel_morphism(X, K)
        _run_check(rep, "kernel factorisation round trip", lambda: _kernel_round_trip(u0, k, f), tag)
        v0 = smp.adel_morphism(Cc, X)
        _run_check(rep, "cokernel factorisation round trip",
                   lambda: _cokernel_round_trip(v0, c, f), tag)

        # mono / epi criteria
        _run_check(rep, "mono criterion agreement", lambda: _agree(
            ad.is_mono(f), ad.is_zero_object(K), ad.mono_witness(f) is not None), tag)
        _run_check(rep, "epi criterion agreement", lambda: _agree(
            ad.is_epi(f), ad.is_zero_object(Cc), ad.epi_witness(f) is not None), tag)
        _run_check(rep, "mono witness plug-back", lambda: _mono_witness_ok(f), tag)
        _run_check(rep, "epi witness plug-back", lambda: _epi_witness_ok(f), tag)

        # kernel-cokernel factorisation
        fac = ad.kernel_cokernel_factorization(f)
        _run_check(rep, "If.Jf == 1", lambda: eq(ad.compose(fac.If, fac.Jf),
                                               ad.identity(fac.If.source)), tag)
        _run_check(rep, "Jf.If == 1", lambda: eq(ad.compose(fac.Jf, fac.If),
                                               ad.identity(fac.Jf.source)), tag)
        _run_check(rep, "p.If.i == f", lambda: eq(ad.chain(fac.p, fac.If, fac.i), f), tag)

        # projective resolution
        _run_check(rep, "projective resolution", lambda: _resolution_ok(A), tag)

        # null factorisation
        z = smp.null_morphism(A, B)
        _run_check(rep, "null factorisation", lambda: _null_ok(z), tag)

        # duality
        _run_check(rep, "duality involution", lambda: _duality_involution(f), tag)
        _run_check(rep, "duality exchanges kernels and cokernels", lambda: _duality_exchange(f), tag)
    rep.seconds = time.perf_counter() - start
    return rep


def _agree(*flags: bool) -> bool:
    return len(set(flags)) == 1


def _kernel_round_trip(u0: AdelMorphism, k: AdelMorphism, f: AdelMorphism) -> bool:
    g = ADEL.compose(u0, k)
    u = ADEL.factor_through_kernel(g, f)
    return ADEL.equal(ADEL.compose(u, k), g) and ADEL.equal(u, u0)


def _cokernel_round_trip(v0: AdelMorphism, c: AdelMorphism, f: AdelMorphism) -> bool:
    g = ADEL.compose(c, v0)
    v = ADEL.factor_through_cokernel(g, f)
    return ADEL.equal(ADEL.compose(c, v), g) and ADEL.equal(v, v0)


def _mono_witness_ok(f: AdelMorphism) -> bool:
    w = ADEL.mono_witness(f)
    if w is None:
        return True
    s, t, u, v = (x.mat for x in w)
    A, B = f.source, f.target
    lhs = s @ A.x0.mat + A.x1.mat @ u + f.f1.mat @ v
    return lhs == ZMatrix.identity(A.X1.rank) and t @ A.x0.mat == B.x0.mat @ v


def _epi_witness_ok(f: AdelMorphism) -> bool:
    w = ADEL.epi_witness(f)
    if w is None:
        return True
    s, t, u, v = (x.mat for x in w)
    A, B = f.source, f.target
    lhs = s @ B.x0.mat + t @ f.f1.mat + B.x1.mat @ u
    return lhs == ZMatrix.identity(B.X1.rank) and t @ A.x1.mat == B.x1.mat @ v


def _resolution_ok(A: AdelObject) -> bool:
    ad = ADEL
    r = ad.projective_resolution(A)
    if r.P.X0.rank or r.Q.X0.rank:
        return False
    if not ad.is_epi(r.c) or not ad.is_zero(ad.compose(r.f, r.c)):
        return False
    if not ad.is_iso(ad.factor_through_cokernel(r.c, r.f)):
        return False
    Kf, _ = ad.kernel(r.f)
    return ZF.is_zero_object(Kf.X0)


def _null_ok(z: AdelMorphism) -> bool:
    nf = ADEL.null_factorization(z)
    return ADEL.compose(nf.g, nf.h) == z and ADEL.is_zero_object(nf.middle)


def _duality_involution(f: AdelMorphism) -> bool:
    ad = ADEL
    return (ad.dualize(ad.dualize(f.source)) == f.source
            and ad.dualize_morphism(ad.dualize_morphism(f)) == f)


def _duality_exchange(f: AdelMorphism) -> bool:
    ad = ADEL
    Df = ad.dualize_morphism(f)
    K, k = ad.kernel(f)
    C, c = ad.cokernel(f)
    KD, kD = ad.kernel(Df)
    CD, cD = ad.cokernel(Df)
    return (ad.dualize(C) == KD and ad.dualize_morphism(c) == kD
            and ad.dualize(K) == CD and ad.dualize_morphism(k) == cD)


# ---------------------------------------------------------------------------
# homology suite


def homology_suite(seed: int = DEFAULT_SEED, count: int = 100) -> SuiteReport:
    """Homology functor: well-definedness, functoriality, exactness and block lemmas."""
    rep = SuiteReport("homology", seed)
    smp = Sampler(seed ^ 0x5EED)
    ad = ADEL
    H = homology_for(ZM)
    HA = H.adel
    start = time.perf_counter()
    for n in range(count):
        tag = f"case {n}"
        rep.cases += 1
        A, B, C = smp.adel_object(), smp.adel_object(), smp.adel_object()
        f, f2 = smp.adel_morphism(A, B), smp.adel_morphism(A, B)
        g = smp.adel_morphism(B, C)
        hat = lambda x: hat_functor(E, x)

        _run_check(rep, "null-homotopic maps to zero",
                   lambda: ZM.is_zero(hat(smp.null_morphism(A, B))), tag)
        f_alt = ad.add(f, smp.null_morphism(A, B))
        _run_check(rep, "representative independence", lambda: ZM.equal(hat(f), hat(f_alt)), tag)
        _run_check(rep, "identity", lambda: ZM.equal(hat(ad.identity(A)),
                                                     ZM.identity(hat(A))), tag)
        _run_check(rep, "functoriality",
                   lambda: ZM.equal(hat(ad.compose(f, g)), ZM.compose(hat(f), hat(g))), tag)
        _run_check(rep, "additivity",
                   lambda: ZM.equal(hat(ad.add(f, f2)), ZM.add(hat(f), hat(f2))), tag)

        # H after I is the identity, on the nose
        G, G2 = smp.group(), smp.group()
        m = smp.group_morphism(G, G2)
        _run_check(rep, "H.I == 1", lambda: H.obj(HA.include(G)) == G
                   and H.mor(HA.include_morphism(m)) == m, tag)
        _run_check(rep, "hat(E).I == E", lambda: hat(ad.include(A.X1)) == E.obj(A.X1)
                   and hat(ad.include_morphism(f.f1)) == E.mor(f.f1), tag)

        # exactness
        _run_check(rep, "left exactness", lambda: _left_exact(f), tag)
        _run_check(rep, "right exactness", lambda: _right_exact(f), tag)

        # block lemmas in Z-mod
        _run_check(rep, "block cokernel lemma", lambda: _block_cokernel_check(smp), tag)
        _run_check(rep, "block kernel/cokernel lemma", lambda: _block_diagonal_check(smp), tag)
    rep.seconds = time.perf_counter() - start
    return rep


def _left_exact(f: AdelMorphism) -> bool:
    _, k = ADEL.kernel(f)
    hk, hf = hat_functor(E, k), hat_functor(E, f)
    if not ZM.is_zero(ZM.compose(hk, hf)):
        return False
    return ZM.is_iso(ZM.factor_through_kernel(hk, hf))


def _right_exact(f: AdelMorphism) -> bool:
    _, c = ADEL.cokernel(f)
    hc, hf = hat_functor(E, c), hat_functor(E, f)
    if not ZM.is_zero(ZM.compose(hf, hc)):
        return False
    return ZM.is_iso(ZM.factor_through_cokernel(hc, hf))


def _block_cokernel_check(smp: Sampler) -> bool:
    """``[f.c; -c]: A+C -> D`` is a cokernel of ``[[1, f], [0, -b]]`` when ``c`` is one of ``b``."""
    A, Bg, Cg = smp.group(), smp.group(), smp.group()
    f, b = smp.group_morphism(A, Cg), smp.group_morphism(Bg, Cg)
    D, c = ZM.cokernel(b)
    M = ZM.matrix([A, Bg], [A, Cg], [[1, f], [None, ZM.neg(b)]])
    g = ZM.matrix([A, Cg], [D], [[ZM.compose(f, c)], [ZM.neg(c)]])
    return _is_cokernel(g, M)


def _block_diagonal_check(smp: Sampler) -> bool:
    """``[c; 0]`` is a cokernel and ``[k, 0]`` a kernel of ``[[f, 0], [0, 1]]``."""
    A, Bg, Cg = smp.group(), smp.group(), smp.group()
    f = smp.group_morphism(A, Cg)
    D, c = ZM.cokernel(f)
    K, k = ZM.kernel(f)
    M = ZM.matrix([A, Bg], [Cg, Bg], [[f, None], [None, 1]])
    cc = ZM.matrix([Cg, Bg], [D], [[c], [None]])
    kk = ZM.matrix([K], [A, Bg], [[k, None]])
    return _is_cokernel(cc, M) and _is_kernel(kk, M)


def _is_cokernel(g: GroupMorphism, m: GroupMorphism) -> bool:
    return ZM.is_zero(ZM.compose(m, g)) and ZM.is_epi(g) \
        and ZM.is_iso(ZM.factor_through_cokernel(g, m))


def _is_kernel(g: GroupMorphism, m: GroupMorphism) -> bool:
    return ZM.is_zero(ZM.compose(g, m)) and ZM.is_mono(g) \
        and ZM.is_iso(ZM.factor_through_kernel(g, m))


# ---------------------------------------------------------------------------
# linear-algebra suite


MODULI = (2, 3, 4, 5, 8, 9)


def linalg_suite(seed: int = DEFAULT_SEED, count: int = 500) -> SuiteReport:
    """Normal-form invariants, solver plug-backs and modular obstructions."""
    rep = SuiteReport("linalg", seed)
    smp = Sampler(seed ^ 0x11A1, bound=9)
    rng = smp.rng
    start = time.perf_counter()
    for n in range(count):
        tag = f"case {n}"
        rep.cases += 1
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        M = smp.matrix(r, c)
        _run_check(rep, "snf invariants", lambda: snf_ok(M), tag)
        _run_check(rep, "hnf invariants", lambda: hnf_ok(M), tag)
        K = linalg.kernel_basis(M)
        _run_check(rep, "kernel basis", lambda: kernel_ok(M, K), tag)

        X0 = smp.matrix(rng.randint(1, 3), r)
        B = X0 @ M
        _run_check(rep, "solve_left plug-back", lambda: _solve_ok(M, B), tag)
        n1, n2, m0 = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
        a1, b0 = smp.matrix(n1, n2), smp.matrix(m0, c)
        Cm = smp.matrix(n1, m0) @ b0 + a1 @ smp.matrix(n2, c)
        _run_check(rep, "solve_homotopy plug-back", lambda: _homotopy_ok(a1, b0, Cm), tag)

        if n % 5 == 0:
            Mn, Bn, d = _negative_instance(smp)
            _run_check(rep, "negative solve confirmed modulo m",
                       lambda: linalg.solve_left(Mn, Bn) is None
                       and not solvable_mod(Mn, Bn, d), tag)
    rep.seconds = time.perf_counter() - start
    return rep


def snf_ok(M: ZMatrix) -> bool:
    dec = linalg.snf(M)
    D = dec.D
    rows, cols = M.shape
    diag_only = all(D[i, j] == 0 for i in range(rows) for j in range(cols) if i != j)
    d = dec.diagonal
    chain = all(x >= 0 for x in d) and all(
        (b == 0) if a == 0 else (b % a == 0) for a, b in zip(d, d[1:]))
    return (dec.U @ M @ dec.V == D and dec.U.det() in (1, -1) and dec.V.det() in (1, -1)
            and diag_only and chain)


def hnf_ok(M: ZMatrix) -> bool:
    dec = linalg.hnf(M)
    H = dec.H
    if dec.U @ M != H or dec.U.det() not in (1, -1):
        return False
    last = -1
    for i in range(H.rows):
        nz = [j for j in range(H.cols) if H[i, j]]
        if not nz:
            if any(H[k, j] for k in range(i, H.rows) for j in range(H.cols)):
                return False
            break
        p = nz[0]
        if p <= last or H[i, p] <= 0:
            return False
        if any(H[k, p] for k in range(i + 1, H.rows)):
            return False
        if any(not 0 <= H[k, p] < H[i, p] for k in range(i)):
            return False
        last = p
    # same row space
    return linalg.solve_left(M, H) is not None and linalg.solve_left(H, M) is not None


def kernel_ok(M: ZMatrix, K: ZMatrix) -> bool:
    if not (K @ M).is_zero():
        return False
    if K.rows != M.rows - _rank(M):
        return False
    # rows are Hermite reduced, hence canonical
    return linalg.hnf(K).H.submatrix(range(K.rows), range(K.cols)) == K


def _rank(M: ZMatrix) -> int:
    return linalg.hnf(M).rank


def _solve_ok(M: ZMatrix, B: ZMatrix) -> bool:
    X = linalg.solve_left(M, B)
    return X is not None and X @ M == B


def _homotopy_ok(a1: ZMatrix, b0: ZMatrix, C: ZMatrix) -> bool:
    sol = linalg.solve_homotopy(a1, b0, C)
    return sol is not None and sol[0] @ b0 + a1 @ sol[1] == C


def _negative_instance(smp: Sampler) -> tuple[ZMatrix, ZMatrix, int]:
    rng = smp.rng
    n, m = rng.randint(1, 3), rng.randint(1, 3)
    d = rng.choice(MODULI)
    diag = [1] * min(n, m)
    j = rng.randrange(len(diag))
    diag[j] = d
    for i in range(j + 1, len(diag)):
        diag[i] = d * rng.choice((1, 2))
    U0, V0 = smp.unimodular(n), smp.unimodular(m)
    M = U0 @ ZMatrix.diagonal(n, m, diag) @ V0
    e = [0] * m
    e[j] = rng.randint(1, d - 1)
    B = ZMatrix([e], 1, m) @ V0
    return M, B, d


def solvable_mod(M: ZMatrix, B: ZMatrix, m: int) -> bool:
    """Brute force: is ``X . M == B`` solvable modulo ``m``? (small shapes only)"""
    from itertools import product

    n = M.rows
    images = {}
    for x in product(range(m), repeat=n):
        v = tuple(sum(x[i] * M[i, j] for i in range(n)) % m for j in range(M.cols))
        images.setdefault(v, x)
    return all(tuple(b % m for b in B.row(i)) in images for i in range(B.rows))


SUITES = {"linalg": linalg_suite, "adel": adel_suite, "homology": homology_suite}

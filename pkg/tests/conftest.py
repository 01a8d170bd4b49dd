import itertools
import math
from functools import reduce

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from adelman.linalg import ZMatrix

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def matrices(draw, max_rows=4, max_cols=4, bound=9, min_rows=0, min_cols=0, rows=None, cols=None):
    r = draw(st.integers(min_rows, max_rows)) if rows is None else rows
    c = draw(st.integers(min_cols, max_cols)) if cols is None else cols
    data = draw(st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                         min_size=r, max_size=r))
    return ZMatrix(data, r, c)


def leibniz_det(rows):
    """Determinant by permutation expansion; independent of the library."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, p in enumerate(perm):
            term *= rows[i][p]
        total += term
    return total


def determinantal_divisors(M):
    """``d_k = gcd`` of all k x k minors, for k = 1 .. min(shape)."""
    a = M.tolist()
    out = []
    for k in range(1, min(M.shape) + 1):
        minors = [leibniz_det([[a[i][j] for j in cs] for i in rs])
                  for rs in itertools.combinations(range(M.rows), k)
                  for cs in itertools.combinations(range(M.cols), k)]
        out.append(reduce(math.gcd, minors, 0))
    return out


def invariant_factors_oracle(M):
    """Smith diagonal from determinantal divisors: ``s_k = d_k / d_(k-1)``."""
    dd = determinantal_divisors(M)
    out, prev = [], 1
    for d in dd:
        if d == 0:
            out.append(0)
        else:
            out.append(d // prev)
            prev = d
    return out


# acceptance criteria report one line each, printed after the run
ACCEPTANCE: list[str] = []


def record_criterion(number: int, title: str, ok: bool, seconds: float, limit: float | None,
                     detail: str = "") -> None:
    bound = f" (limit {limit:g} s)" if limit is not None else ""
    extra = f"; {detail}" if detail else ""
    ACCEPTANCE.append(f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} "
                      f"[{seconds:.2f} s{bound}{extra}]")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)

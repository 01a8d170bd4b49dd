import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from adelman import io
from adelman.audit import Sampler
from adelman.linalg import ZMatrix
from adelman.zfree import free, mor
from adelman.zmod import cyclic, make_group_morphism

from conftest import matrices

seeds = st.integers(0, 2 ** 32)


@given(matrices(max_rows=3, max_cols=3, bound=2 ** 60))
def test_matrix_round_trip(M):
    assert io.loads(io.dumps(M)) == M
    assert io.matrix_from_json(io.matrix_to_json(M), M.rows, M.cols) == M


def test_big_integers_are_strings():
    big = 10 ** 30
    doc = io.matrix_to_json(ZMatrix([[big, 1]]))
    assert doc == [[str(big), 1]]
    assert io.matrix_from_json([["-123456789012345678901234567890", "7"]]) == \
        ZMatrix([[-123456789012345678901234567890, 7]])


def test_empty_matrices_need_shapes():
    assert io.matrix_to_json(ZMatrix.zero(0, 3)) == {"rows": 0, "cols": 3, "data": []}
    assert io.matrix_from_json({"rows": 2, "cols": 0, "data": [[], []]}) == ZMatrix.zero(2, 0)
    with pytest.raises(io.FormatError):
        io.matrix_from_json([])
    # a shape supplied by the context is enough
    assert io.matrix_from_json([], 0, 2) == ZMatrix.zero(0, 2)


@pytest.mark.parametrize("bad", [[[1, "x"]], [[1.5]], [[True]], [[1], [1, 2]], {"rows": 1}, 3])
def test_matrix_format_errors(bad):
    with pytest.raises(io.FormatError):
        io.matrix_from_json(bad)


@given(seeds)
def test_adel_round_trip(seed):
    f = Sampler(seed).test_morphism()
    assert io.loads(io.dumps(f)) == f
    assert io.loads(io.dumps(f.source)) == f.source


def test_other_round_trips():
    for value in (free(3), mor([[1, 2]]), cyclic(6),
                  make_group_morphism(cyclic(4), cyclic(2), ZMatrix([[1]]))):
        assert io.loads(io.dumps(value)) == value


def test_document_errors():
    with pytest.raises(io.FormatError, match="unknown kind"):
        io.loads('{"kind": "spline"}')
    with pytest.raises(io.FormatError, match="invalid JSON"):
        io.loads("{")
    with pytest.raises(io.FormatError, match="missing field"):
        io.loads('{"kind": "adel_object", "x0": {"dom": 0, "cod": 1, "mat": []}}')
    with pytest.raises(io.FormatError):
        io.loads(json.dumps({"kind": "adel_object",
                             "x0": {"dom": 1, "cod": 2, "mat": [[1, 0]]},
                             "x1": {"dom": 1, "cod": 1, "mat": [[1]]}}))
    with pytest.raises(TypeError):
        io.to_document(object())
    with pytest.raises(io.FormatError, match="cannot read"):
        io.load("/nonexistent/file.json")


def test_bare_array_is_a_matrix():
    assert io.loads("[[1, 2], [3, 4]]") == ZMatrix([[1, 2], [3, 4]])


def test_non_natural_morphism_is_rejected():
    from adelman.errors import IllTypedError
    doc = {"kind": "adel_morphism",
           "source": {"x0": {"dom": 0, "cod": 1, "mat": []}, "x1": {"dom": 1, "cod": 0, "mat": [[]]}},
           "target": {"x0": {"dom": 0, "cod": 1, "mat": []}, "x1": {"dom": 1, "cod": 1, "mat": [[3]]}},
           "f0": {"dom": 0, "cod": 0, "mat": []},
           "f1": {"dom": 1, "cod": 1, "mat": [[1]]},
           "f2": {"dom": 0, "cod": 1, "mat": []}}
    with pytest.raises(IllTypedError):
        io.from_document(doc)

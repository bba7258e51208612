"""Smoke tests for the python bindings."""

import cmath

import pytest

import schur_toeplitz as st


def test_exact_determinant():
    sym = st.Symbol.from_coeffs(1, ["2", "-3", "1"])
    assert sym.backend == "exact"
    assert st.det(sym, 3) == "-15"
    assert st.det(sym, 3, method="dense") == "-15"
    assert st.det(sym, 1) == "-3"


def test_float_determinant_and_roots():
    sym = st.Symbol.from_coeffs(1, [2.0, -3.0, 1.0])
    assert sym.backend == "float"
    value = st.det(sym, 3)
    assert isinstance(value, complex)
    assert abs(value - (-15.0)) < 1e-9
    roots = sorted(st.find_roots(sym), key=lambda z: z.real)
    assert abs(roots[0] - 1.0) < 1e-9
    assert abs(roots[1] - 2.0) < 1e-9


def test_minor_and_shapes():
    sym = st.Symbol.from_roots(2, "1", ["1", "2", "3", "1/2", "-1"])
    value = st.minor(sym, 7, [3, 6], [3, 7])
    flipped = st.minor(sym, 7, [3, 6], [3, 7], variant="flipped")
    assert value == flipped
    # strike everything: the void minor
    assert st.minor(sym, 2, [1, 2], [1, 2]) == "1"


def test_adjugate_and_inverse():
    sym = st.Symbol.from_coeffs(1, ["2", "-3", "1"])
    assert st.adjugate_entry(sym, 2, 1, 1) == "-3"
    for method in ("skew", "skew_flipped", "schur_sum", "trench"):
        assert st.adjugate_entry(sym, 2, 1, 1, method=method) == "-3"
    assert st.inverse_entry(sym, 2, 1, 1) == "-3/7"
    assert st.adj_first_column(sym, 2) == ["-3", "-1"]


def test_eigenvector():
    sym = st.Symbol.from_coeffs(1, ["1", "0", "1"])
    out = st.eigenvector(sym, 2, "1")
    assert out["v"] == ["1", "1"]
    assert not out["zero_vector"]

    symf = st.Symbol.from_coeffs(1, [1.0, 0.0, 1.0])
    outf = st.eigenvector(symf, 8, 0.5 + 0.25j)
    matrix = st.toeplitz_dense(symf, 8)
    v = outf["v"]
    x = 0.5 + 0.25j
    scale = max(abs(c) for c in v)
    for i in range(8):
        residual = sum(matrix[i][j] * v[j] for j in range(8)) - x * v[i]
        assert abs(residual) <= 1e-10 * scale
    assert outf["geometric"] is not None
    assert len(outf["geometric"]["C"]) == 2


def test_schur_and_pieri():
    assert st.skew_schur([2, 1], roots=["1", "2"]) == "6"
    assert st.skew_schur([5, 4, 2], inner=[5, 4, 2], roots=["1", "2"]) == "1"
    assert st.skew_schur([1], eseq=["1", "3", "2"]) == "3"
    assert st.pieri_expand([8, 8, 8, 5], 2) == [[8, 8, 8, 3], [8, 8, 7, 4], [8, 8, 6, 5]]


def test_errors():
    sym = st.Symbol.from_coeffs(0, ["1", "2"])
    with pytest.raises(st.MathError):
        st.adjugate_entry(sym, 3, 1, 1, method="schur_sum")
    with pytest.raises(ValueError):
        st.Symbol.from_coeffs(1, ["2.5", "1"], backend="exact")
    singular = st.Symbol.from_coeffs(1, ["1", "-1", "1"])
    with pytest.raises(st.MathError):
        st.inverse_entry(singular, 2, 1, 1)

import math

import pytest

import equicode as eq


def test_lemmens_seidel_sizes_and_rank():
    for n in (3, 5, 12):
        c = eq.lemmens_seidel_code(n)
        assert len(c) == 2 * n - 2
        assert c.dim == n
        assert eq.code_rank(c) == n
        assert eq.detect_equiangular(c) == pytest.approx(1 / 3)


def test_28_lines_gerzon():
    cert = eq.gerzon_certificate(eq.seven_dim_28_lines())
    assert cert["pass"]
    assert cert["lhs"] == 28 and cert["rhs"] == 28
    assert cert["witness"]["rank"] == 7


def test_validate_reports_violations():
    basis = eq.Code([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    ok, violations, _ = eq.validate(basis, "point:0.5")
    assert not ok and violations == 3
    ok, violations, _ = eq.validate(basis, "point:0")
    assert ok and violations == 0


def test_projection_formula():
    a = 0.2
    for t in range(1, 6):
        assert eq.predicted_projection_angle(a, t, a) == pytest.approx(1 / (t + 1 / a))


def test_simplex_certificates():
    s = eq.regular_simplex(6)
    assert eq.negative_clique_certificate(s, 1 / 6)["pass"]
    cert = eq.multipartite_certificate(s, [[i] for i in range(7)], 0.5, 1 / 6)
    assert cert["lhs"] == pytest.approx(49, abs=1e-10)


def test_eigen_and_embedding():
    assert eq.eigenvalues([[1, 1], [1, 1]]) == pytest.approx([2, 0], abs=1e-12)
    c = eq.embed_gram([[1, -0.5, -0.5], [-0.5, 1, -0.5], [-0.5, -0.5, 1]])
    assert c.dim == 2 and c.inner(0, 1) == pytest.approx(-0.5)


def test_errors_carry_kind():
    with pytest.raises(eq.EquicodeError) as info:
        eq.embed_gram([[1, 2], [2, 1]])
    assert info.value.args[0] == "NotRealizable"


def test_concatenated_code_is_seeded():
    a, beta_a, _ = eq.concatenated_code(16, 2, 2, 0.5, seed=1)
    b, beta_b, _ = eq.concatenated_code(16, 2, 2, 0.5, seed=1)
    assert a.vectors() == b.vectors()
    assert beta_a == beta_b
    assert len(a) == 3 * math.comb(16, 2)


def test_file_round_trip_and_cli():
    text = eq.write_code_file(eq.regular_simplex(3))
    assert eq.write_code_file(eq.load_code_file(text)) == text
    code, _, _ = eq.cli(["construct", "nonsense"])
    assert code == 2


def test_reduction_accounting():
    out = eq.reduction_pipeline(eq.lemmens_seidel_code(10), 4)
    assert out["accounted"] == out["total"] == 18


def test_catalog_and_table():
    assert all(c["pass"] for c in eq.catalog_lambda_checks(0, 5))
    assert eq.bound_table(7, 2, 1 / 3, 1 / 3)["gerzon"] == 28

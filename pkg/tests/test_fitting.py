import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import heapslaw as hl


class TestFit:
    def test_exact_power_law(self):
        x = np.array([1.0, 2.0, 5.0, 10.0, 40.0])
        res = hl.fit(list(zip(x, 3.0 * x**0.5)), "loglog")
        assert res.slope == pytest.approx(0.5, abs=1e-12)
        assert res.pearson_r == pytest.approx(1.0, abs=1e-12)
        assert res.intercept == pytest.approx(np.log(3.0), abs=1e-12)

    def test_two_points_exact(self):
        res = hl.fit([(1.0, 2.0), (3.0, 8.0)], "linlin")
        assert res.pearson_r == 1.0
        assert res.slope_err == 0.0
        assert res.intercept_err == 0.0
        assert res.n_points == 2
        down = hl.fit([(1.0, 8.0), (3.0, 2.0)], "linlin")
        assert down.pearson_r == -1.0

    def test_linlog_recovers_log_line(self):
        x = np.array([1.0, np.e, np.e**2, np.e**3])
        y = 2.0 + 0.5 * np.log(x)
        res = hl.fit(list(zip(x, y)), "linlog")
        assert res.slope == pytest.approx(0.5, abs=1e-12)
        assert res.intercept == pytest.approx(2.0, abs=1e-12)

    def test_degenerate_inputs(self):
        with pytest.raises(hl.DegenerateInput):
            hl.fit([(1.0, 2.0)], "linlin")
        with pytest.raises(hl.DegenerateInput):
            hl.fit([(2.0, 1.0), (2.0, 5.0)], "linlin")

    def test_log_domain_errors(self):
        with pytest.raises(hl.DomainError):
            hl.fit([(0.0, 1.0), (2.0, 2.0)], "loglog")
        with pytest.raises(hl.DomainError):
            hl.fit([(1.0, -1.0), (2.0, 2.0)], "loglog")
        with pytest.raises(hl.DomainError):
            hl.fit([(-1.0, 1.0), (2.0, 2.0)], "linlog")
        # linlog only transforms x, so negative y is fine there
        res = hl.fit([(1.0, -1.0), (np.e, 2.0)], "linlog")
        assert res.n_points == 2

    def test_unknown_transform(self):
        with pytest.raises(hl.DomainError):
            hl.fit([(1.0, 1.0), (2.0, 2.0)], "sqrt")

    @given(
        scale=st.floats(0.25, 4096.0),
        exponent=st.floats(-2.0, 2.0),
        coeff=st.floats(0.5, 8.0),
    )
    def test_noiseless_exponent_recovery(self, scale, exponent, coeff):
        x = np.array([1.0, 3.0, 7.5, 21.0])
        res = hl.fit(list(zip(x, coeff * x**exponent)), "loglog")
        assert res.slope == pytest.approx(exponent, abs=1e-9)
        scaled = hl.fit(list(zip(scale * x, coeff * x**exponent)), "loglog")
        # rescaling x moves only the intercept
        assert scaled.slope == pytest.approx(res.slope, abs=1e-9)
        if abs(exponent) > 1e-3:
            assert abs(scaled.pearson_r) == pytest.approx(abs(res.pearson_r), abs=1e-9)


class TestProportionalityFit:
    def test_exact_ratio(self):
        pts = [(1.0, 2.0), (2.0, 4.0), (5.0, 10.0)]
        res = hl.proportionality_fit(pts)
        assert res.ratio == pytest.approx(2.0, abs=1e-14)
        assert res.ratio_err == pytest.approx(0.0, abs=1e-12)

    def test_noisy_ratio_has_error_bar(self):
        pts = [(1.0, 2.1), (2.0, 3.9), (4.0, 8.3), (8.0, 15.7)]
        res = hl.proportionality_fit(pts)
        assert res.ratio == pytest.approx(2.0, abs=0.05)
        assert res.ratio_err > 0

    def test_degenerate(self):
        with pytest.raises(hl.DegenerateInput):
            hl.proportionality_fit([(1.0, 1.0)])
        with pytest.raises(hl.DegenerateInput):
            hl.proportionality_fit([(0.0, 1.0), (0.0, 2.0)])


class TestFitCsvExport:
    def test_columns_and_residuals(self, tmp_path):
        points = [(1.0, 2.0), (2.0, 4.0), (4.0, 8.0)]
        res = hl.fit(points, "loglog")
        path = tmp_path / "fit.csv"
        hl.write_fit_csv(path, points, res)
        rows = path.read_text().splitlines()
        assert rows[0] == "x,y,transformed_x,transformed_y,residual"
        assert len(rows) == 4
        for row in rows[1:]:
            x, y, tx, ty, resid = (float(v) for v in row.split(","))
            assert tx == pytest.approx(np.log(x))
            assert ty == pytest.approx(np.log(y))
            assert resid == pytest.approx(0.0, abs=1e-12)


class TestWorksFixtureFit:
    def test_table_fit_matches_frozen_values(self):
        # Frozen from an independent regression over the shipped CSV
        # (ln V on ln N, 74 rows with the suspect one dropped).
        result = hl.table1_heaps_fit()
        assert result["n_works"] == 74
        assert result["slope"] == pytest.approx(0.68516, abs=5e-5)
        assert result["pearson_r"] == pytest.approx(0.98766, abs=5e-5)

    def test_suspect_row_changes_fit(self):
        full = hl.table1_heaps_fit(include_suspect=True)
        assert full["n_works"] == 75
        assert full["pearson_r"] < 0.98766  # outlier drags the correlation

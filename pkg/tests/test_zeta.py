import io

import numpy as np
import pytest

from omqm import (
    DomainError,
    ParseError,
    find_zeros,
    hardy_z,
    load_zeros,
    riemann_von_mangoldt_estimate,
    save_zeros,
)


class TestHardyZ:
    def test_value_at_origin(self):
        # Z(0) = zeta(1/2); reference from an independent high-precision evaluation
        assert hardy_z(0.0) == pytest.approx(-1.4603545088095868, abs=1e-9)

    def test_first_zero_bracket(self):
        assert hardy_z(14.0) * hardy_z(14.2) < 0.0

    def test_second_zero_bracket(self):
        assert hardy_z(20.0) * hardy_z(21.5) < 0.0

    def test_domain_window(self):
        with pytest.raises(DomainError):
            hardy_z(-0.5)
        with pytest.raises(DomainError):
            hardy_z(500.1)

    def test_array_matches_scalars(self):
        # array calls share one series cutoff per chunk, so agreement is
        # to evaluation accuracy rather than bit-exact
        ts = np.array([0.0, 5.5, 14.1, 100.25])
        arr = hardy_z(ts)
        for t, v in zip(ts, arr):
            assert v == pytest.approx(hardy_z(float(t)), abs=1e-10)


class TestFindZeros:
    def test_zero_count_empty(self):
        assert find_zeros(0) == []

    def test_first_zero(self):
        z = find_zeros(1)
        assert z[0].sigma == pytest.approx(14.134725, abs=1e-5)
        assert z[0].tolerance <= 1e-6

    def test_second_zero(self):
        z = find_zeros(2)
        assert z[1].sigma == pytest.approx(21.022040, abs=1e-5)

    def test_count_cap(self):
        with pytest.raises(DomainError):
            find_zeros(101)
        with pytest.raises(DomainError):
            find_zeros(-1)

    def test_matches_reference_list(self, zeros30, ref_zeros):
        assert len(zeros30) == 30
        for mine, ref in zip(zeros30, ref_zeros):
            assert abs(mine.sigma - ref.sigma) <= 1e-5

    def test_invariants(self, zeros30):
        sigmas = [z.sigma for z in zeros30]
        assert sigmas == sorted(sigmas)
        assert all(a < b for a, b in zip(sigmas, sigmas[1:]))
        assert [z.index for z in zeros30] == list(range(1, 31))
        assert all(z.tolerance <= 1e-6 for z in zeros30)

    def test_counts_match_density_estimate(self, zeros30):
        for t_cap in (20.0, 40.0, 60.0, 80.0, 100.0):
            count = sum(1 for z in zeros30 if z.sigma <= t_cap)
            assert abs(count - riemann_von_mangoldt_estimate(t_cap)) <= 1.0


class TestLoadZeros:
    def test_two_line_file(self):
        zeros = load_zeros(io.StringIO("14.134725\n21.022040\n"))
        assert len(zeros) == 2
        assert zeros[0].sigma == pytest.approx(14.134725)
        assert zeros[0].tolerance == pytest.approx(1e-6)
        assert zeros[1].index == 2

    def test_non_monotone_is_parse_error(self):
        with pytest.raises(ParseError, match="line 2"):
            load_zeros(io.StringIO("21.0\n14.1\n"))

    def test_non_numeric_is_parse_error(self):
        with pytest.raises(ParseError, match="line 3"):
            load_zeros(io.StringIO("14.1\n21.0\nbogus\n"))

    def test_empty_file(self):
        assert load_zeros(io.StringIO("")) == []

    def test_comments_and_blanks_skipped(self):
        zeros = load_zeros(io.StringIO("# header\n\n14.134725\n\n# note\n21.022040\n"))
        assert [z.index for z in zeros] == [1, 2]

    def test_roundtrip(self, tmp_path):
        src = [z for z in load_zeros(io.StringIO("14.13472514\n21.02203964\n25.01085758\n"))]
        target = tmp_path / "zeros.txt"
        save_zeros(src, target)
        back = load_zeros(target)
        assert [z.sigma for z in back] == [z.sigma for z in src]
        assert [z.tolerance for z in back] == [z.tolerance for z in src]


class TestDensityEstimate:
    def test_known_value_at_hundred(self):
        # 29 zeros lie below t = 100
        assert riemann_von_mangoldt_estimate(100.0) == pytest.approx(29.0, abs=1.0)

    def test_nonpositive(self):
        assert riemann_von_mangoldt_estimate(0.0) == 0.0

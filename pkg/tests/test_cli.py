"""
Tests for the efountain command line
"""

import pytest

from cli import build_parser, main

pytestmark = pytest.mark.integration


class TestParser:
    """Argument parsing"""

    def test_analyze_defaults(self):
        args = build_parser().parse_args(["analyze", "x.txt"])
        assert args.e_set == "all-idempotents"
        assert args.format is None

    def test_search_requires_max_order(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["search"])


class TestAnalyzeCommand:
    """efountain analyze"""

    def test_rectangular_band_fails(self, fixtures_dir, capsys):
        code = main([
            "analyze", str(fixtures_dir / "rectangular_band_2.txt"),
            "--e-set", str(fixtures_dir / "rectangular_band_2.e"),
        ])
        out = capsys.readouterr().out
        assert code == 1
        assert "# structure: rectangular_band_2" in out
        assert "generalizedRightAmple: PASS" in out
        assert "isomorphism: FAIL" in out

    def test_group_passes(self, fixtures_dir):
        assert main(["analyze", str(fixtures_dir / "z2.txt"), "--e-set", str(fixtures_dir / "z2.e")]) == 0

    def test_report_and_category_dump(self, fixtures_dir, tmp_path, capsys):
        report_path = tmp_path / "ct3.report"
        category_path = tmp_path / "ct3.category"
        main([
            "analyze", str(fixtures_dir / "catalan_3.txt"),
            "--report", str(report_path),
            "--dump-category", str(category_path),
        ])
        out = capsys.readouterr().out
        assert report_path.read_text() == out
        assert category_path.read_text() == (fixtures_dir / "golden" / "catalan_3.category").read_text()

    def test_generator_file(self, fixtures_dir, capsys):
        main(["analyze", str(fixtures_dir / "catalan_3.gens")])
        out = capsys.readouterr().out
        assert "# |S|=5" in out
        assert "theorem.mainHomomorphism: PASS" in out

    def test_no_category_to_dump(self, fixtures_dir, tmp_path):
        code = main([
            "analyze", str(fixtures_dir / "left_zero_2.txt"),
            "--dump-category", str(tmp_path / "c.txt"),
        ])
        assert code == 1
        assert not (tmp_path / "c.txt").exists()

    def test_empty_file_is_parse_error(self, fixtures_dir, capsys):
        assert main(["analyze", str(fixtures_dir / "empty.txt")]) == 2
        assert capsys.readouterr().err.startswith("parse error: line 1")

    def test_bad_token(self, fixtures_dir, capsys):
        assert main(["analyze", str(fixtures_dir / "bad_token.txt")]) == 2
        assert "line 3, column 5" in capsys.readouterr().err

    def test_nonassociative(self, fixtures_dir, capsys):
        assert main(["analyze", str(fixtures_dir / "nonassociative.txt")]) == 1
        assert capsys.readouterr().err.startswith("error:")

    def test_bad_ring(self, fixtures_dir, capsys):
        assert main(["analyze", str(fixtures_dir / "z2.txt"), "--ring", "real"]) == 1
        assert "unknown ring" in capsys.readouterr().err

    def test_composite_modulus(self, fixtures_dir, capsys):
        code = main(["analyze", str(fixtures_dir / "z2.txt"), "--e-set", str(fixtures_dir / "z2.e"), "--ring", "mod6"])
        out = capsys.readouterr().out
        assert code == 0
        assert "isomorphism: PASS" in out


class TestCatalanCommand:
    """efountain catalan"""

    @pytest.mark.parametrize("degree", [1, 4])
    def test_passes(self, degree, capsys):
        assert main(["catalan", "--degree", str(degree)]) == 0
        assert "isomorphism: PASS" in capsys.readouterr().out

    def test_degree_limit(self, monkeypatch):
        monkeypatch.setenv("EFOUNTAIN_MAX_CATALAN_DEGREE", "2")
        assert main(["catalan", "--degree", "3"]) == 1


class TestSearchCommand:
    """efountain search"""

    def test_order_1(self, capsys, tmp_path):
        report_path = tmp_path / "search.report"
        assert main(["search", "--max-order", "1", "--report", str(report_path)]) == 0
        out = capsys.readouterr().out
        assert "o1t0E0.mainHomomorphism: PASS" in out
        assert "o1t0E0.ehresmannEquivalence: PASS" in out
        assert "# structure: search(max_order=1)" in report_path.read_text()

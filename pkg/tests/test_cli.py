# dpz — exact arithmetic for del Pezzo surfaces and elliptic algebras
# Copyright (C) 2024-2026 Dr Horst Herb
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""Tests for dpz.cli."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from dpz.classify import alcove_candidates
from dpz.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, build_parser, run
from dpz.reports import parse_report

E8_ROOT = "d=1:[1,-1,-1,-1,0,0,0,0,0]"


def _run(capsys, *argv: str) -> tuple[int, str, str]:
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExamples:
    def test_root_count(self, capsys):
        assert _run(capsys, "roots", "--d", "1", "--count") == (EXIT_OK, "240\n", "")

    @pytest.mark.parametrize("key,count", [("2", 126), ("3", 72), ("6", 8), ("8F0", 2)])
    def test_root_count_json(self, capsys, key, count):
        code, out, _ = _run(capsys, "roots", "--d", key, "--count", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["rows"] == [{"count": count, "d": key}]

    def test_resolution_shape(self, capsys):
        code, out, _ = _run(capsys, "resolution", "--V", "1,0", "--dL", "1", "--depth", "4")
        assert code == EXIT_OK
        assert "[-6,-5,-4,-3] -> [-3,-2,-1] -> [0]" in out

    def test_moduli_tsv(self, capsys):
        code, out, _ = _run(
            capsys, "moduli", "--slope", "0", "--r", "1", "--d", "1", "--format", "tsv"
        )
        assert code == EXIT_OK
        header, *rows = out.splitlines()
        columns = header.split("\t")
        assert columns[:5] == ["slope", "r", "d", "type", "degrees"]
        row = dict(zip(columns, rows[0].split("\t")))
        assert row["type"] == "E8"
        assert row["degrees"] == "1,2,2,3,3,4,4,5,6"
        assert row["status"] == "wps"

    def test_global_flags_before_command(self, capsys):
        code, out, _ = _run(capsys, "--format", "json", "roots", "--d", "7", "--count")
        assert code == EXIT_OK
        assert json.loads(out)["rows"][0]["count"] == 2


class TestCommands:
    def test_roots_listing_round_trip(self, capsys):
        code, out, _ = _run(capsys, "roots", "--d", "6", "--format", "json")
        assert code == EXIT_OK
        kind, roots = parse_report(out)
        assert kind == "vector"
        assert len(roots) == 8
        assert all(r.square() == -2 for r in roots)

    def test_simple_roots(self, capsys):
        code, out, _ = _run(capsys, "roots", "--d", "1", "--simple", "--format", "tsv")
        assert code == EXIT_OK
        assert E8_ROOT in out
        assert len(out.splitlines()) == 9

    def test_alcove_points(self, capsys):
        code, out, _ = _run(capsys, "alcove", "--points", "2", "--format", "json")
        assert code == EXIT_OK
        assert len(parse_report(out)[1]) == 3

    def test_alcove_of_a_root(self, capsys):
        code, out, _ = _run(capsys, "alcove", "--vector", E8_ROOT, "--format", "json")
        assert code == EXIT_OK
        kind, (point,) = parse_report(out)
        assert kind == "alcove"
        assert point.is_valid()

    def test_affine_alcove_unsupported(self, capsys):
        code, _, err = _run(capsys, "alcove", "--vector", "d=7:[0,1,-1]")
        assert code == EXIT_DOMAIN
        assert "affine reduction needs roots spanning" in err

    def test_cvp_of_a_lattice_point(self, capsys):
        code, out, _ = _run(capsys, "cvp", "--vector", E8_ROOT, "--format", "json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["rows"] == [{"distance": "0", "vector": E8_ROOT}]

    def test_pairing(self, capsys):
        o = "(1; d=1:[0,0,0,0,0,0,0,0,0]; 1)"
        code, out, _ = _run(capsys, "pairing", "--M", o, "--N", o, "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["rows"][0]["chi"] == 1

    def test_phistar_of_a_line(self, capsys):
        code, out, _ = _run(
            capsys, "phistar", "--curve", "d=1:[1,-1,0,0,0,0,0,0,0]", "--format", "json"
        )
        assert code == EXIT_OK
        kind, (image,) = parse_report(out)
        assert kind == "surface_class"
        assert (image.rank, image.chi) == (2, 0)
        assert image.is_exceptional()

    def test_collection(self, capsys):
        o = "(1; d=1:[0,0,0,0,0,0,0,0,0]; 1)"
        code, out, _ = _run(capsys, "collection", "--class", o, "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["rows"][0]["ok"] is True

    def test_chi_e(self, capsys):
        code, out, _ = _run(capsys, "chi-e", "--M", "1,0", "--N", "2,1", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["rows"][0] == {
            "M": "(1,0)", "N": "(2,1)", "chi": 1, "hom": 1, "ext": 0,
        }

    def test_autoeq_list(self, capsys):
        code, out, _ = _run(capsys, "autoeq", "--list", "--format", "tsv")
        assert code == EXIT_OK
        assert "PhiDivInverse" in out

    def test_autoeq_psi(self, capsys):
        code, out, _ = _run(
            capsys, "autoeq", "--kind", "Psi", "--N", "1,0", "--dL", "2", "--power", "2",
            "--format", "json",
        )
        assert code == EXIT_OK
        _, images = parse_report(out)
        assert [(c.rank, c.deg) for c in images] == [(1, 2), (1, 4)]

    def test_minimality_with_relation(self, capsys):
        code, out, _ = _run(
            capsys, "minimality", "--V", "1,0", "--dL", "1", "--relations", "2q",
            "--format", "json",
        )
        assert code == EXIT_OK
        assert json.loads(out)["rows"][0]["minimal"] is True

    def test_minimality_generic(self, capsys):
        code, out, _ = _run(capsys, "minimality", "--V", "1,0", "--dL", "1", "--format", "json")
        assert code == EXIT_OK
        row = json.loads(out)["rows"][0]
        assert row["minimal"] is False
        assert row["culprits"] == ["-3@1-2"]

    def test_relations_from_config(self, capsys, tmp_path):
        path = tmp_path / "dpz.cfg"
        path.write_text("relations = 2q\n")
        code, out, _ = _run(
            capsys, "minimality", "--V", "1,0", "--dL", "1", "--config", str(path),
            "--format", "json",
        )
        assert code == EXIT_OK
        assert json.loads(out)["rows"][0]["minimal"] is True

    @pytest.mark.parametrize("v,dl,expected", [("1,0", "3", False), ("1,0", "4", True),
                                               ("2,1", "1", True)])
    def test_koszul(self, capsys, v, dl, expected):
        code, out, _ = _run(capsys, "koszul", "--V", v, "--dL", dl, "--format", "json")
        assert code == EXIT_OK
        row = json.loads(out)["rows"][0]
        assert row["koszul"] is expected
        assert row["resolution"] is expected

    def test_hilbert(self, capsys):
        code, out, _ = _run(
            capsys, "hilbert", "--V", "2,1", "--dL", "1", "--n", "6", "--format", "json"
        )
        assert code == EXIT_OK
        assert [row["dim"] for row in json.loads(out)["rows"]] == [1, 4, 8, 12, 16, 20, 24]

    def test_center_series(self, capsys):
        code, out, _ = _run(
            capsys, "hilbert", "--V", "2,1", "--dL", "1", "--n", "3", "--series", "center",
            "--format", "json",
        )
        assert code == EXIT_OK
        assert [row["dim"] for row in json.loads(out)["rows"]] == [1, 1, 2, 3]

    def test_candidates_round_trip(self, capsys):
        code, out, _ = _run(capsys, "candidates", "--slope=-1/3", "--format", "json")
        assert code == EXIT_OK
        assert parse_report(out) == ("candidate", alcove_candidates(Fraction(-1, 3)))

    def test_classify_slope(self, capsys):
        code, out, _ = _run(capsys, "classify-slope", "--slope=-1/2", "--format", "json")
        assert code == EXIT_OK
        (row,) = json.loads(out)["rows"]
        assert row["status"] == "representable"
        assert "rational-curve" in row["reason"]

    def test_decimate(self, capsys):
        code, out, _ = _run(capsys, "decimate", "--degrees", "1,2,2,3", "--format", "json")
        assert code == EXIT_OK
        assert [row["order"] for row in json.loads(out)["rows"]] == [2, 3]

    def test_polarization(self, capsys):
        code, out, _ = _run(capsys, "polarization", "--d", "1", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["rows"][0]["definiteness"] == "indefinite"
        code, out, _ = _run(
            capsys, "polarization", "--d", "1", "--fix", "point", "--fix", "structure",
            "--format", "json",
        )
        assert code == EXIT_OK
        assert json.loads(out)["rows"][0]["free_dim"] == 9

    def test_tables(self, capsys):
        code, out, _ = _run(capsys, "tables", "--format", "json")
        assert code == EXIT_OK
        reports = json.loads(out)["reports"]
        roots = reports[0]["rows"]
        assert [row["roots"] for row in roots[:6]] == [240, 126, 72, 40, 20, 8]
        assert [row["type"] for row in roots[:6]] == ["E8", "E7", "E6", "D5", "A4", "A2A1"]
        assert reports[1]["rows"][0]["shape"].endswith("[-3,-2,-1] -> [0]")

    @pytest.mark.parametrize("flag", ["--paper", "--full"])
    def test_tables_paper_flag(self, flag):
        args = build_parser().parse_args(["tables", flag])
        assert args.paper is True
        assert build_parser().parse_args(["tables"]).paper is False

    def test_config_command(self, capsys, tmp_path):
        path = tmp_path / "dpz.cfg"
        path.write_text(f"degree = 3\ntemplate_dir = {tmp_path / 'tpl'}\n")
        code, out, _ = _run(
            capsys, "config", "--config", str(path), "--install-templates", "--format", "json"
        )
        assert code == EXIT_OK
        data = json.loads(out)["reports"]
        assert len(data[0]["rows"]) == 2
        assert (tmp_path / "tpl" / "table.tsv.j2").is_file()
        assert data[1]["items"][0]["degree"] == "3"


class TestErrors:
    def test_domain_error_exit(self, capsys):
        code, out, err = _run(capsys, "classify-slope", "--slope", "1/2")
        assert code == EXIT_DOMAIN
        assert out == ""
        assert err.startswith("error: slope must lie strictly between -1 and 0")

    def test_r_max(self, capsys):
        code, _, err = _run(capsys, "classify-slope", "--slope=-1/20", "--r-max", "15")
        assert code == EXIT_DOMAIN
        assert "exceeds r_max=15" in err

    def test_unknown_command(self, capsys):
        assert _run(capsys, "plot")[0] == EXIT_USAGE

    def test_unknown_flag(self, capsys):
        assert _run(capsys, "roots", "--colour")[0] == EXIT_USAGE

    def test_unknown_format(self, capsys):
        assert _run(capsys, "roots", "--count", "--format", "xml")[0] == EXIT_USAGE

    def test_inexact_number(self, capsys):
        code, _, err = _run(capsys, "candidates", "--slope", "abc")
        assert code == EXIT_USAGE
        assert "not an exact fraction" in err

    def test_bad_vector(self, capsys):
        code, _, err = _run(capsys, "cvp", "--vector", "[1,2]")
        assert code == EXIT_DOMAIN
        assert "cannot parse vector" in err

    def test_missing_config(self, capsys, tmp_path):
        code, _, err = _run(capsys, "roots", "--config", str(tmp_path / "none.cfg"))
        assert code == EXIT_DOMAIN
        assert "does not exist" in err

    def test_install_templates_needs_dir(self, capsys):
        code, _, err = _run(capsys, "config", "--install-templates")
        assert code == EXIT_DOMAIN
        assert "template_dir is not configured" in err

    def test_help_exits_cleanly(self, capsys):
        assert _run(capsys, "--help")[0] == EXIT_OK


def test_every_command_is_registered():
    parser = build_parser()
    sub = next(a for a in parser._actions if a.dest == "command")
    assert set(sub.choices) == {
        "roots", "alcove", "cvp", "pairing", "twist", "phistar", "collection", "chi-e",
        "autoeq", "resolution", "minimality", "koszul", "hilbert", "candidates",
        "classify-slope", "moduli", "decimate", "polarization", "tables", "config",
    }


def test_output_is_deterministic(capsys):
    first = _run(capsys, "candidates", "--slope=-3/8", "--format", "tsv")
    second = _run(capsys, "candidates", "--slope=-3/8", "--format", "tsv")
    assert first == second

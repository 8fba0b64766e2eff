# This file is part of toricfans.
#
# toricfans is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# toricfans is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with toricfans. If not, see <https://www.gnu.org/licenses/>.

__author__ = "Lukas Reiter"
__copyright__ = "Copyright (C) 2024 Lukas Reiter"
__license__ = "GPLv3"

import json
import pytest
from pathlib import Path
from toricfans.cli.analyze import AnalysisOptions, analyze
from toricfans.cli.io import parse_matrix_file, parse_matrix_text
from toricfans.cli.main import main
from toricfans.models.collection import BorderKind
from toricfans.models.matrix import IntMatrix
from toricfans.models.quotient import PinnedTransforms
from toricfans.models.report import MatrixKind
from toricfans.utils import InputError, NotFanMatrixError, NotWeightMatrixError
from .conftest import matrix

NOCONVERSE = "# kind=fan\n1 0 -1 1\n0 1 -2 1\n"
PTB = "1 0 0 0 -1 1\n0 1 0 0 -1 1\n0 0 1 -1 -1 1\n"


def write(path: Path, text: str) -> Path:
    path.write_text(text, encoding="utf-8")
    return path


def test_parse_matrix_text():
    result, kind = parse_matrix_text(NOCONVERSE)
    assert kind == MatrixKind.fan
    assert result == matrix([[1, 0, -1, 1], [0, 1, -2, 1]])
    result, kind = parse_matrix_text("# a comment\n\n1 2 1 0\n0 1 1 1\n")
    assert kind is None
    assert result.rows == 2
    _, kind = parse_matrix_text("#kind = weight\n1 1\n")
    assert kind == MatrixKind.weight


@pytest.mark.parametrize("text", ["1 2 3\n4 5\n", "1 x 3\n", "# only a comment\n", "", "# kind=torus\n1 1\n"])
def test_parse_matrix_text_errors(text):
    with pytest.raises(InputError):
        parse_matrix_text(text)


def test_parse_missing_file(tmp_path):
    with pytest.raises(InputError):
        parse_matrix_file(tmp_path / "missing.txt")


def test_analyze_fan_matrix():
    report = analyze(matrix([[1, 0, -1, 1], [0, 1, -2, 1]]))
    assert report.Q == matrix([[1, 2, 1, 0], [0, 1, 1, 1]])
    assert len(report.moving) == 1
    item = report.moving[0]
    assert len(item.collections) == 2
    assert item.border.kind == BorderKind.interior
    assert item.decompositions == ()
    assert report.quotient is None
    assert all(status.severity == "success" for status in report.status)


def test_analyze_weight_matrix():
    report = analyze(matrix([[1, 2, 1, 0], [0, 1, 1, 1]]), AnalysisOptions(kind=MatrixKind.weight))
    assert report.Q == matrix([[1, 2, 1, 0], [0, 1, 1, 1]])
    assert not any((report.V @ report.Q.T).entries)
    assert len(report.moving) == 1


def test_analyze_refuses_invalid_input():
    with pytest.raises(NotFanMatrixError):
        analyze(matrix([[1, 2, -1], [0, 0, 1]]))
    with pytest.raises(NotWeightMatrixError):
        analyze(matrix([[1, 1, 0], [0, 0, 1]]), AnalysisOptions(kind=MatrixKind.weight))


def test_analyze_intbord_chamber(nowptb):
    report = analyze(nowptb.V)
    assert len(report.moving) == 1
    item = report.moving[0]
    assert item.border.kind == BorderKind.intbord
    assert len(item.decompositions) == 1
    decomposition = item.decompositions[0]
    assert not decomposition.maxbord
    assert "no_opposite_pairs" in decomposition.failed_conditions
    assert item.tower is None


def test_analyze_torsion(torsion_example):
    pinned = PinnedTransforms(mu=torsion_example.mu, nu=torsion_example.nu, W=torsion_example.W,
                              U_G=torsion_example.U_G)
    report = analyze(torsion_example.V, AnalysisOptions(pinned=pinned))
    assert not report.fan_flags.is_CF
    assert len(report.moving) == 8
    assert report.quotient.torsion_factors == (30,)
    assert report.quotient.Gamma == ((1, 1, 0, 0, 1, 0, 0),)


@pytest.mark.slow
def test_analyze_with_complete_fans():
    report = analyze(matrix([[1, 0, -1, 1], [0, 1, -2, 1]]), AnalysisOptions(enumerate_complete=True))
    assert len(report.complete_fans) == 1
    assert report.complete_fans[0].is_projective


def test_main_prints_a_summary(tmp_path, capsys):
    assert main(["analyze", str(write(tmp_path / "noconverse.txt", NOCONVERSE))]) == 0
    output = capsys.readouterr().out
    assert "3 chambers, 1 in Mov" in output
    assert "collections {1,2}, {3,4}" in output


def test_main_writes_json(tmp_path):
    source = write(tmp_path / "ptb.txt", PTB)
    target = tmp_path / "ptb.json"
    assert main(["analyze", str(source), "--json", str(target)]) == 0
    data = json.loads(target.read_text(encoding="utf-8"))
    assert data["kind"] == "fan"
    assert len(data["chambers"]) >= len(data["moving"])
    assert len(data["moving"]) == 2
    assert data["quotient"] is None


def test_main_reads_weight_matrices(tmp_path):
    source = write(tmp_path / "weights.txt", "1 2 1 0\n0 1 1 1\n")
    target = tmp_path / "weights.json"
    assert main(["analyze", str(source), "--kind", "weight", "--json", str(target)]) == 0
    assert json.loads(target.read_text(encoding="utf-8"))["kind"] == "weight"


def test_main_draws_the_secondary_fan(tmp_path):
    target = tmp_path / "ptb.svg"
    assert main(["analyze", str(write(tmp_path / "ptb.txt", PTB)), "--svg", str(target)]) == 0
    assert "<svg" in target.read_text(encoding="utf-8")


def test_main_pinned_transforms(tmp_path, torsion_example):
    pinned = PinnedTransforms(mu=torsion_example.mu, nu=torsion_example.nu, W=torsion_example.W,
                              U_G=torsion_example.U_G)
    source = write(tmp_path / "torsion.txt",
                   "\n".join(" ".join(str(item) for item in torsion_example.V.row(i)) for i in range(4)))
    transforms = write(tmp_path / "pinned.json", pinned.model_dump_json())
    target = tmp_path / "torsion.json"
    assert main(["analyze", str(source), "--pin-transforms", str(transforms), "--json", str(target)]) == 0
    quotient = json.loads(target.read_text(encoding="utf-8"))["quotient"]
    assert quotient["torsion_factors"] == [30]
    assert quotient["Gamma"] == [[1, 1, 0, 0, 1, 0, 0]]
    assert quotient["pinned"]


@pytest.mark.parametrize("text, extra", [
    ("1 2 3\n4 5\n", []),
    ("1 2 -1\n0 0 1\n", []),
    (NOCONVERSE, ["--svg", "section.svg"]),
])
def test_main_exit_codes(tmp_path, capsys, text, extra):
    source = write(tmp_path / "input.txt", text)
    extra = [str(tmp_path / item) if item.endswith(".svg") else item for item in extra]
    assert main(["analyze", str(source)] + extra) == 2
    assert "error" in capsys.readouterr().err


def test_main_rejects_unreadable_transforms(tmp_path):
    source = write(tmp_path / "noconverse.txt", NOCONVERSE)
    transforms = write(tmp_path / "pinned.json", "{\"mu\": 1}")
    assert main(["analyze", str(source), "--pin-transforms", str(transforms)]) == 2
    assert main(["analyze", str(tmp_path / "missing.txt")]) == 2


def test_pinned_transforms_must_fit_the_matrix(tmp_path, torsion_example):
    pinned = PinnedTransforms(mu=torsion_example.mu, nu=torsion_example.nu, W=torsion_example.W,
                              U_G=IntMatrix.identity(5))
    with pytest.raises(InputError):
        analyze(torsion_example.V, AnalysisOptions(pinned=pinned))
    source = write(tmp_path / "torsion.txt",
                   "\n".join(" ".join(str(item) for item in torsion_example.V.row(i)) for i in range(4)))
    transforms = write(tmp_path / "pinned.json", pinned.model_dump_json())
    assert main(["analyze", str(source), "--pin-transforms", str(transforms)]) == 2

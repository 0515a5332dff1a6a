"""
명령줄 인터페이스 테스트

mock_data의 문서로 각 하위 명령의 출력과 종료 코드(0/1/2/64)를 검증합니다.
"""
import json
from fractions import Fraction
from pathlib import Path

import pytest

from app.cli import EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from app.core.subsets import GradualSubset
from app.models.documents import parse_document, to_gradual

# Mock 데이터 경로
MOCK_DATA_PATH = Path(__file__).parent / "mock_data" / "documents.json"


def load_documents():
    """테스트 문서 로드"""
    with open(MOCK_DATA_PATH, "r", encoding="utf-8") as f:
        data = json.load(f)
    return data["documents"]


@pytest.fixture
def write_doc(tmp_path):
    """이름으로 mock 문서를 임시 파일에 기록하고 경로를 반환"""
    documents = load_documents()

    def write(name: str) -> str:
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(documents[name]), encoding="utf-8")
        return str(path)

    return write


def read_doc(path) -> object:
    return parse_document(Path(path).read_text(encoding="utf-8"))


class TestUsage:
    """사용법 오류 테스트"""

    def test_empty_invocation(self, capsys):
        assert main([]) == EXIT_USAGE
        assert "usage" in capsys.readouterr().err

    def test_unknown_subcommand(self, capsys):
        assert main(["bogus"]) == EXIT_USAGE
        assert "gradual:" in capsys.readouterr().err

    def test_missing_direction(self, write_doc):
        assert main(["convert", "-i", write_doc("fuzzy_ab")]) == EXIT_USAGE

    def test_missing_file(self, tmp_path, capsys):
        missing = str(tmp_path / "nope.json")
        assert main(["convert", "-i", missing, "--direction", "to-gradual"]) == EXIT_INPUT
        assert "gradual:" in capsys.readouterr().err


class TestConvert:
    """convert 명령 테스트"""

    def test_to_gradual(self, write_doc, tmp_path):
        out = tmp_path / "sigma.json"
        code = main(["convert", "-i", write_doc("fuzzy_ab"), "--direction", "to-gradual", "-o", str(out)])
        assert code == EXIT_OK
        sigma = to_gradual(read_doc(out))
        assert sigma.map.breakpoints[0] == Fraction(1, 2)
        assert sigma("1/2") == sigma.ground.mask_of(["a", "b"])
        assert sigma("3/4") == sigma.ground.mask_of(["a"])

    def test_to_gradual_strict(self, write_doc, tmp_path):
        out = tmp_path / "sigma.json"
        main(["convert", "-i", write_doc("fuzzy_ab"), "--direction", "to-gradual-strict", "-o", str(out)])
        assert to_gradual(read_doc(out)) == to_gradual(read_doc(write_doc("gradual_unattained")))

    def test_property_F_violation(self, write_doc, capsys):
        code = main(["convert", "-i", write_doc("gradual_unattained"), "--direction", "to-fuzzy"])
        assert code == EXIT_INPUT
        assert "원소 b" in capsys.readouterr().err

    def test_wrong_kind(self, write_doc):
        assert main(["convert", "-i", write_doc("gradual_attained"), "--direction", "to-gradual"]) == EXIT_INPUT

    def test_strict_round_trip(self, write_doc, tmp_path):
        """ν̃ 출력 -> υ̃ -> ν̃ 가 같은 파일을 만든다"""
        first, fuzzy, second = tmp_path / "g1.json", tmp_path / "f1.json", tmp_path / "g2.json"
        main(["convert", "-i", write_doc("fuzzy_ab"), "--direction", "to-gradual-strict", "-o", str(first)])
        main(["convert", "-i", str(first), "--direction", "to-fuzzy-strict", "-o", str(fuzzy)])
        main(["convert", "-i", str(fuzzy), "--direction", "to-gradual-strict", "-o", str(second)])
        assert first.read_text(encoding="utf-8") == second.read_text(encoding="utf-8")

    def test_to_system_and_back(self, write_doc, tmp_path):
        system, back = tmp_path / "system.json", tmp_path / "back.json"
        source = write_doc("gradual_attained")
        assert main(["convert", "-i", source, "--direction", "to-system", "-o", str(system)]) == EXIT_OK
        document = read_doc(system)
        assert document.kind == "system"
        assert document.objects == [["a", "b"], ["a", "b"], ["a"], ["a"]]
        assert main(["convert", "-i", str(system), "--direction", "to-gradual", "-o", str(back)]) == EXIT_OK
        assert to_gradual(read_doc(back)) == to_gradual(read_doc(source))

    def test_system_document(self, write_doc, tmp_path):
        out = tmp_path / "sigma.json"
        assert main(["convert", "-i", write_doc("system_ab"), "--direction", "to-gradual", "-o", str(out)]) == EXIT_OK
        assert to_gradual(read_doc(out)) == to_gradual(read_doc(write_doc("gradual_attained")))

    def test_system_document_other_direction(self, write_doc):
        assert main(["convert", "-i", write_doc("system_ab"), "--direction", "to-fuzzy"]) == EXIT_INPUT


class TestOperator:
    """operator 명령 테스트"""

    def test_closure_alpha(self, write_doc, capsys):
        code = main(["operator", "closure", "-i", write_doc("gradual_increasing"), "--alpha", "1/4"])
        assert code == EXIT_OK
        assert "σ(1/4) = {a, b}" in capsys.readouterr().out

    def test_interior_alpha(self, write_doc, capsys):
        code = main(["operator", "interior", "-i", write_doc("gradual_increasing"), "--alpha", "1/2"])
        assert code == EXIT_OK
        assert "σ(1/2) = {b}" in capsys.readouterr().out

    def test_interior_of_unattained_is_itself(self, write_doc, tmp_path):
        out = tmp_path / "d.json"
        source = write_doc("gradual_unattained")
        main(["operator", "interior", "-i", source, "-o", str(out)])
        assert to_gradual(read_doc(out)) == to_gradual(read_doc(source))

    def test_union(self, write_doc, tmp_path):
        out = tmp_path / "u.json"
        inputs = ["-i", write_doc("gradual_attained"), "-i", write_doc("gradual_increasing")]
        assert main(["operator", "union", *inputs, "-o", str(out)]) == EXIT_OK
        sigma = to_gradual(read_doc(out))
        assert sigma == GradualSubset.constant(sigma.ground, ["a", "b"])

    def test_unary_with_two_inputs(self, write_doc):
        inputs = ["-i", write_doc("gradual_attained"), "-i", write_doc("gradual_increasing")]
        assert main(["operator", "closure", *inputs]) == EXIT_INPUT


class TestGroup:
    """group 명령 테스트"""

    def test_check_fuzzy_subgroup(self, write_doc, tmp_path, capsys):
        out = tmp_path / "mu1.json"
        code = main(["group", "check-fuzzy-subgroup", "-i", write_doc("s3"), "-i", write_doc("s3_a3_graded"),
                     "-o", str(out)])
        assert code == EXIT_OK
        captured = capsys.readouterr().out
        assert "valid fuzzy subgroup" in captured
        assert "normal: True" in captured
        document = read_doc(out)
        assert document.kind == "fuzzy-subgroup"
        assert document.grades["e"] == "1/1"

    def test_fuzzy_subgroup_document(self, write_doc, tmp_path):
        out = tmp_path / "mu1.json"
        code = main(["group", "check-fuzzy-subgroup", "-i", write_doc("s3"), "-i", write_doc("s3_fuzzy_subgroup"),
                     "-o", str(out)])
        assert code == EXIT_OK
        grades = read_doc(out).grades
        assert grades["e"] == "1/1"
        assert grades["(123)"] == "1/3"

    def test_fuzzy_subgroup_document_group_mismatch(self, write_doc, tmp_path):
        z6 = tmp_path / "z6.json"
        z6.write_text(json.dumps({"kind": "group", "preset": "cyclic:6"}), encoding="utf-8")
        code = main(["group", "check-fuzzy-subgroup", "-i", str(z6), "-i", write_doc("s3_fuzzy_subgroup")])
        assert code == EXIT_INPUT

    def test_to_gradual(self, write_doc, tmp_path):
        out = tmp_path / "sigma.json"
        code = main(["group", "to-gradual", "-i", write_doc("s3"), "-i", write_doc("s3_a3_graded"), "-o", str(out)])
        assert code == EXIT_OK
        assert len(read_doc(out).pieces) == 3

    def test_to_gradual_non_strict(self, write_doc, tmp_path):
        out = tmp_path / "sigma.json"
        main(["group", "to-gradual", "-i", write_doc("s3"), "-i", write_doc("s3_a3_graded"),
              "--non-strict", "-o", str(out)])
        sigma = to_gradual(read_doc(out))
        assert sigma("1/2") == sigma.ground.mask_of(["e", "(123)", "(132)"])
        assert sigma("1/4") == sigma.ground.full_mask

    def test_product_equal(self, write_doc, capsys):
        inputs = ["-i", write_doc("s3"), "-i", write_doc("s3_a3_graded"), "-i", write_doc("s3_transposition")]
        assert main(["group", "product", *inputs]) == EXIT_OK
        assert capsys.readouterr().out.strip().endswith("equal")

    def test_not_a_subgroup(self, write_doc, capsys):
        code = main(["group", "check-fuzzy-subgroup", "-i", write_doc("s3"), "-i", write_doc("s3_not_subgroup")])
        assert code == EXIT_INPUT
        err = capsys.readouterr().err
        assert "(12)" in err and "(23)" in err

    def test_normality(self, write_doc, capsys):
        assert main(["group", "normality", "-i", write_doc("s3"), "-i", write_doc("s3_transposition")]) == EXIT_OK
        assert "normal: False" in capsys.readouterr().out

    def test_quotient(self, write_doc, capsys):
        code = main(["group", "quotient", "-i", write_doc("s3"), "-i", write_doc("s3_gradual_subgroup")])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert "|G/σ| = 1" in out
        assert "|G/σ| = 2" in out

    def test_first_input_must_be_group(self, write_doc):
        assert main(["group", "to-gradual", "-i", write_doc("s3_a3_graded")]) == EXIT_INPUT


class TestDemos:
    """demo-zint / examples 명령 테스트"""

    def test_demo_zint(self, capsys):
        assert main(["demo-zint", "--x", "2", "--window", "20"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "7/18" in out
        assert "running max < 1/2: ok" in out

    def test_demo_zint_bad_window(self):
        assert main(["demo-zint", "--window", "0"]) == EXIT_INPUT

    def test_examples(self, capsys):
        assert main(["examples"]) == EXIT_OK
        out = capsys.readouterr().out
        headers = [line for line in out.splitlines() if line.startswith("[")]
        assert len(headers) == 4
        assert all(line.endswith("ok") for line in headers)

    def test_examples_corrupted_interior(self, monkeypatch, capsys):
        monkeypatch.setattr(
            "app.core.worked_examples.interior_d",
            lambda sigma: GradualSubset.constant(sigma.ground, []),
        )
        assert main(["examples"]) == EXIT_MISMATCH
        out = capsys.readouterr().out
        assert "[intersection-gap] MISMATCH" in out
        assert "[union-gap] ok" in out


if __name__ == "__main__":
    pytest.main([__file__, "-v"])

"""
점진적 대수 명령줄 인터페이스

사용 예:
    python -m app.cli convert -i fuzzy.json --direction to-gradual-strict
    python -m app.cli operator closure -i sigma.json -o closed.json
    python -m app.cli group product -i s3.json -i mu1.json -i mu2.json
    python -m app.cli demo-zint --x 2 --window 200 --t-max 6
    python -m app.cli examples

종료 코드: 0 성공, 1 회귀 불일치, 2 입력/성질 위반, 64 사용법 오류
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from app.config import get_settings
from app.core.engine import GradualEngine
from app.core.errors import GradualError
from app.core.levels import as_level
from app.models.documents import dump_document, parse_document, to_gradual
from app.models.schemas import (
    ConvertDirection,
    EngineResponse,
    GroupAction,
    GroupDocument,
    OperatorName,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gradual", description="점진적 원소/부분집합/부분군 도구")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def with_io(p: argparse.ArgumentParser) -> None:
        p.add_argument("-i", "--input", action="append", default=[], help="입력 문서 (반복 가능)")
        p.add_argument("-o", "--output", help="출력 문서 경로 (생략 시 stdout)")

    convert = sub.add_parser("convert", help="퍼지 <-> 점진적 부분집합 변환")
    with_io(convert)
    convert.add_argument(
        "--direction", required=True, choices=[d.value for d in ConvertDirection]
    )

    operator = sub.add_parser("operator", help="c, d, 합집합, 교집합, 수정 교집합")
    operator.add_argument("op", choices=[o.value for o in OperatorName])
    with_io(operator)
    operator.add_argument("--alpha", help="결과를 이 레벨에서 평가해 출력 (\"p/q\")")

    group = sub.add_parser("group", help="퍼지 부분군 / 점진적 부분군 명령 (첫 입력은 군 문서)")
    group.add_argument("action", choices=[a.value for a in GroupAction])
    with_io(group)
    group.add_argument("--non-strict", action="store_true", help="to-gradual에서 ν 사용")

    settings = get_settings()
    demo = sub.add_parser("demo-zint", help="ℤ 위 퍼지 부분군 합의 상한 데모")
    demo.add_argument("--x", type=int, default=2)
    demo.add_argument("--window", type=int, default=settings.zint_window)
    demo.add_argument("--t-max", type=int, default=settings.zint_t_max)

    sub.add_parser("examples", help="대표 예제 회귀 실행")
    return parser


def _read_documents(paths: Sequence[str]) -> List:
    documents = []
    for path in paths:
        documents.append(parse_document(Path(path).read_text(encoding="utf-8")))
    return documents


def _emit(response: EngineResponse, output: Optional[str]) -> None:
    for line in response.lines:
        print(line)
    if response.document is None:
        return
    text = dump_document(response.document)
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
        logger.info(f"문서 저장: {output}")
    else:
        print(text)


def run(args: argparse.Namespace) -> int:
    engine = GradualEngine()
    if args.command == "convert":
        documents = _read_documents(args.input)
        if len(documents) != 1:
            raise GradualError("convert는 입력 문서 하나가 필요합니다")
        response = engine.convert(documents[0], ConvertDirection(args.direction))
        _emit(response, args.output)
    elif args.command == "operator":
        response = engine.operator(OperatorName(args.op), _read_documents(args.input))
        if args.alpha is not None:
            sigma = to_gradual(response.document)
            alpha = as_level(args.alpha)
            response = EngineResponse(lines=[f"σ({args.alpha}) = {sigma.ground.render(sigma(alpha))}"])
        _emit(response, args.output)
    elif args.command == "group":
        documents = _read_documents(args.input)
        if not documents or not isinstance(documents[0], GroupDocument):
            raise GradualError("첫 번째 입력은 group 문서여야 합니다")
        response = engine.group(
            GroupAction(args.action), documents[0], documents[1:], strict=not args.non_strict
        )
        _emit(response, args.output)
    elif args.command == "demo-zint":
        response = engine.demo_zint(args.x, args.window, args.t_max)
        _emit(response, None)
    else:
        response = engine.worked_examples()
        _emit(response, None)
    return EXIT_OK if response.ok else EXIT_MISMATCH


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    if not argv:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"gradual: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=get_settings().log_level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return run(args)
    except (GradualError, ValidationError, OSError) as e:
        print(f"gradual: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

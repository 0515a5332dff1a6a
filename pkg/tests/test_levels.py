"""
레벨 코어 테스트

유리수 파싱, 구간 조각, 계단 함수 표준형, inf-compact 레벨 집합을 검증합니다.
"""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from app.core.errors import (
    GradeOutOfRange,
    MissingOne,
    NotAPartition,
    NotInfCompact,
    Overlap,
)
from app.core.levels import (
    ONE,
    ZERO,
    IntervalPiece,
    LevelSet,
    StepMap,
    accumulate_suffix,
    canonicalize,
    all_from,
    format_rational,
    infimum_of_false,
    intersect_level_sets,
    make_level_set,
    mask_below,
    min_at_or_above,
    parse_rational,
    supremum,
)
from tests.strategies import step_maps

HALF = Fraction(1, 2)


class TestRationals:
    """유리수 파싱 테스트"""

    @pytest.mark.parametrize("text,expected", [
        ("1/2", Fraction(1, 2)),
        (" 3 / 4 ", Fraction(3, 4)),
        ("1", ONE),
        ("0", ZERO),
        (2, Fraction(2)),
    ])
    def test_parse(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("bad", [0.5, True, "abc", "1/0", "1.5"])
    def test_parse_rejects(self, bad):
        with pytest.raises(GradeOutOfRange):
            parse_rational(bad)

    def test_format_is_p_over_q(self):
        assert format_rational(ONE) == "1/1"
        assert format_rational(Fraction(6, 8)) == "3/4"


class TestIntervalPiece:
    """구간 조각 테스트"""

    def test_open_at_zero(self):
        piece = IntervalPiece(0, HALF, lo_closed=False)
        assert piece.contains(Fraction(1, 100))
        assert piece.contains(HALF)
        assert str(piece) == "(0/1, 1/2]"

    def test_closed_at_zero_rejected(self):
        with pytest.raises(GradeOutOfRange):
            IntervalPiece(0, HALF)

    def test_empty_piece_rejected(self):
        with pytest.raises(GradeOutOfRange):
            IntervalPiece(HALF, HALF, lo_closed=False)

    def test_out_of_range(self):
        with pytest.raises(GradeOutOfRange):
            IntervalPiece(HALF, Fraction(3, 2))


class TestStepMap:
    """계단 함수 테스트"""

    def test_constant(self):
        s = StepMap.constant("a")
        assert s("1/3") == "a"
        assert s.breakpoints == (ONE,)

    def test_from_pieces_and_lookup(self):
        s = StepMap.from_pieces([
            (IntervalPiece(0, HALF, False, False), 1),
            (IntervalPiece.point(HALF), 2),
            (IntervalPiece(HALF, ONE, False, True), 3),
        ])
        assert s(Fraction(1, 4)) == 1
        assert s(HALF) == 2
        assert s(Fraction(3, 4)) == 3
        assert s(ONE) == 3

    def test_overlap(self):
        with pytest.raises(Overlap):
            StepMap.from_pieces([
                (IntervalPiece(0, HALF, False, True), 1),
                (IntervalPiece(HALF, ONE), 2),
            ])

    def test_gap(self):
        with pytest.raises(NotAPartition):
            StepMap.from_pieces([
                (IntervalPiece(0, HALF, False, False), 1),
                (IntervalPiece(HALF, ONE, False, True), 2),
            ])

    def test_canonical_merge(self):
        """같은 값이 이어지는 경계점은 사라짐"""
        split = StepMap.from_pieces([
            (IntervalPiece(0, HALF, False, True), "a"),
            (IntervalPiece(HALF, ONE, False, True), "a"),
        ])
        assert split == StepMap.constant("a")

    def test_pieces_are_maximal_runs(self):
        s = StepMap((Fraction(1, 3), HALF, ONE), (1, 1, 2, 2, 2, 2))
        assert [(str(p), v) for p, v in s.pieces] == [
            ("(0/1, 1/3]", 1),
            ("(1/3, 1/1]", 2),
        ]

    def test_refine_keeps_values(self):
        s = StepMap.from_pieces([
            (IntervalPiece(0, HALF, False, True), 0),
            (IntervalPiece(HALF, ONE, False, True), 1),
        ])
        refined = s.refine([Fraction(1, 4)])
        assert len(refined) == 6
        for piece, value in refined:
            assert s(piece.hi if piece.is_singleton else (piece.lo + piece.hi) / 2) == value

    @given(step_maps(st.integers(0, 3)))
    def test_pieces_rebuild(self, s):
        assert StepMap.from_pieces(s.pieces) == s

    @given(step_maps(st.integers(0, 3)))
    def test_canonicalize_refined(self, s):
        assert canonicalize(s.refine([Fraction(1, 7), Fraction(5, 6)])) == s

    @given(step_maps(st.integers(0, 3)), step_maps(st.integers(0, 3)))
    def test_zip_pointwise(self, s, t):
        z = s.zip_with(t, lambda a, b: a + b)
        for alpha in z.breakpoints + (Fraction(1, 13),):
            assert z(alpha) == s(alpha) + t(alpha)


class TestSuffixAccumulation:
    """suffix 누적 테스트"""

    def test_inclusive_and_strict(self):
        s = StepMap((HALF, ONE), (0b01, 0b00, 0b00, 0b10))
        inclusive = accumulate_suffix(s, lambda a, b: a | b)
        strict = accumulate_suffix(s, lambda a, b: a | b, strict=True)
        assert inclusive(HALF) == 0b10
        assert inclusive(Fraction(1, 4)) == 0b11
        assert strict(HALF) == 0b10
        assert strict(ONE) == 0b10

    def test_strict_point_takes_open_above(self):
        s = StepMap((HALF, ONE), (0, 0b01, 0, 0))
        strict = accumulate_suffix(s, lambda a, b: a | b, strict=True)
        assert strict(HALF) == 0
        assert strict(Fraction(1, 4)) == 0b01

    def test_mask_below(self):
        s = StepMap.constant("a")
        masked = mask_below(s, HALF, None)
        assert masked(Fraction(1, 4)) is None
        assert masked(HALF) == "a"


class TestLevelSets:
    """inf-compact 레벨 집합 테스트"""

    def test_full_and_top(self):
        assert Fraction(1, 7) in LevelSet.full()
        top = LevelSet.top()
        assert ONE in top and HALF not in top

    def test_missing_one(self):
        with pytest.raises(MissingOne):
            make_level_set([IntervalPiece(0, HALF, False, True)])

    def test_not_inf_compact(self):
        """(1/2, 1]: 1/2 위에서 최솟값 없음"""
        with pytest.raises(NotInfCompact):
            make_level_set([IntervalPiece(HALF, ONE, False, True)])

    def test_open_at_zero_is_inf_compact(self):
        level_set = make_level_set([IntervalPiece(0, ONE, False, True)])
        assert min_at_or_above(level_set, Fraction(1, 9)) == Fraction(1, 9)

    def test_adjacent_closed_pieces_merge(self):
        """[1/4,1/2] ∪ (1/2,1] 은 [1/4,1] 로 합쳐져 inf-compact"""
        level_set = make_level_set([
            IntervalPiece(Fraction(1, 4), HALF),
            IntervalPiece(HALF, ONE, False, True),
        ])
        assert [str(p) for p in level_set.pieces] == ["[1/4, 1/1]"]

    def test_min_at_or_above(self):
        level_set = make_level_set([
            IntervalPiece(Fraction(1, 10), Fraction(1, 3)),
            IntervalPiece(HALF, ONE),
        ])
        assert min_at_or_above(level_set, Fraction(1, 20)) == Fraction(1, 10)
        assert min_at_or_above(level_set, Fraction(2, 5)) == HALF
        assert min_at_or_above(level_set, Fraction(1, 4)) == Fraction(1, 4)

    def test_intersection(self):
        first = make_level_set([IntervalPiece(Fraction(1, 4), ONE)])
        second = make_level_set([IntervalPiece(0, HALF, False, True), IntervalPiece.point(ONE)])
        both = intersect_level_sets(first, second)
        assert Fraction(1, 3) in both and Fraction(3, 4) not in both and ONE in both


class TestIndicatorBounds:
    """상한/하한 테스트"""

    def test_supremum_attained(self):
        indicator = StepMap((HALF, ONE), (True, True, False, False))
        assert supremum(indicator) == (HALF, True)

    def test_supremum_unattained(self):
        indicator = StepMap((HALF, ONE), (True, False, False, False))
        assert supremum(indicator) == (HALF, False)

    def test_supremum_empty(self):
        assert supremum(StepMap.constant(False)) is None

    def test_infimum_of_false(self):
        assert infimum_of_false(StepMap.constant(True)) == ONE
        assert infimum_of_false(StepMap.constant(False)) == ZERO
        assert infimum_of_false(StepMap((HALF, ONE), (True, True, False, False))) == HALF
        assert infimum_of_false(StepMap((HALF, ONE), (True, False, True, True))) == HALF

    def test_all_from(self):
        indicator = StepMap((HALF, ONE), (False, True, True, True))
        assert all_from(indicator, HALF)
        assert not all_from(indicator, 0)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])

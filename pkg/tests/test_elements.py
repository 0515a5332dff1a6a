"""
점진적 원소 테스트

확장 ε̄, R_α 관계와 점별 연산 호환성, 확장의 비준동형성,
점진적 원소 군 𝒢 의 군 법칙과 정규 필터레이션 𝒢_α 를 검증합니다.
"""
import operator
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from app.core.elements import (
    GradualElement,
    GroundMap,
    GroundSet,
    PartialGradualElement,
    extend,
    extension_homomorphism_gap,
    group_identity,
    group_inverse,
    group_product,
    in_filtration_subgroup,
    pointwise_op,
    r_alpha_equal,
    restrict_to,
)
from app.core.errors import GradualError, GroundSetMismatch, MissingOne, NotInfCompact
from app.core.groups import cyclic, symmetric
from app.core.levels import ONE, IntervalPiece, mask_below
from tests.strategies import LEVELS, step_maps

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


def splice(high, low, alpha):
    """[α,1] 에서는 high, 그 아래에서는 low"""
    upper = mask_below(high.map, alpha, None)
    return GradualElement(upper.zip_with(low.map, lambda h, l: l if h is None else h))


S3 = symmetric(3)
s3_elements = step_maps(st.integers(0, S3.order - 1)).map(GradualElement)
levels = st.sampled_from(LEVELS)


@pytest.fixture
def z_partials():
    """ℤ 값 부분 원소 ε1, ε2"""
    eps1 = PartialGradualElement.from_pieces([
        (IntervalPiece(HALF, ONE), 2),
        (IntervalPiece(Fraction(1, 10), THIRD), 1),
    ])
    eps2 = PartialGradualElement.from_pieces([(IntervalPiece(Fraction(2, 3), ONE), 2)])
    return eps1, eps2


class TestPartialElements:
    """부분 원소 정의역 테스트"""

    def test_domain_must_contain_one(self):
        with pytest.raises(MissingOne):
            PartialGradualElement.from_pieces([(IntervalPiece(0, HALF, False, True), "a")])

    def test_domain_must_be_inf_compact(self):
        with pytest.raises(NotInfCompact):
            PartialGradualElement.from_pieces([(IntervalPiece(HALF, ONE, False, True), "a")])

    def test_domain_open_at_zero(self):
        eps = PartialGradualElement.from_pieces([(IntervalPiece(0, ONE, False, True), "a")])
        assert eps(Fraction(1, 1000)) == "a"

    def test_total_rejects_none(self):
        with pytest.raises(GradualError):
            GradualElement.from_pieces([(IntervalPiece(0, ONE, False, True), None)])


class TestExtension:
    """확장 ε̄ 테스트"""

    def test_z_extensions(self, z_partials):
        eps1, eps2 = z_partials
        bar1 = extend(eps1)
        assert bar1(Fraction(1, 20)) == 1
        assert bar1(THIRD) == 1
        assert bar1(Fraction(2, 5)) == 2
        assert bar1(ONE) == 2
        assert extend(eps2) == GradualElement.constant(2)

    def test_extension_of_sum_is_not_sum_of_extensions(self, z_partials):
        eps1, eps2 = z_partials
        assert extend(pointwise_op(eps1, eps2, operator.add)) == GradualElement.constant(4)
        summed = pointwise_op(extend(eps1), extend(eps2), operator.add)
        assert summed(THIRD) == 3
        assert summed(HALF) == 4
        assert extension_homomorphism_gap(eps1, eps2, operator.add)

    def test_total_extension_is_identity(self):
        eps = GradualElement.from_pieces([
            (IntervalPiece(0, HALF, False, True), "a"),
            (IntervalPiece(HALF, ONE, False, True), "b"),
        ])
        assert extend(eps.as_partial()) == eps


class TestRAlpha:
    """R_α 관계 테스트"""

    @pytest.fixture
    def ab_partials(self):
        eps1 = PartialGradualElement.from_pieces([
            (IntervalPiece(HALF, ONE, hi_closed=False), "a"),
            (IntervalPiece.point(ONE), "b"),
        ])
        eps2 = PartialGradualElement.from_pieces([
            (IntervalPiece(0, HALF, False, True), "a"),
            (IntervalPiece.point(ONE), "b"),
        ])
        return eps1, eps2

    @pytest.mark.parametrize("alpha", [Fraction(1, 4), HALF, Fraction(3, 4), ONE])
    def test_partials_related_everywhere(self, ab_partials, alpha):
        eps1, eps2 = ab_partials
        assert r_alpha_equal(eps1, eps2, alpha)

    @pytest.mark.parametrize("alpha,expected", [
        (Fraction(1, 4), False),
        (HALF, False),
        (Fraction(3, 4), False),
        (ONE, True),
    ])
    def test_extensions_related_only_at_one(self, ab_partials, alpha, expected):
        eps1, eps2 = ab_partials
        assert r_alpha_equal(extend(eps1), extend(eps2), alpha) is expected

    def test_restriction_is_r_alpha_representative(self):
        eps = GradualElement.from_pieces([
            (IntervalPiece(0, HALF, False, False), "a"),
            (IntervalPiece(HALF, ONE), "b"),
        ])
        restricted = restrict_to(eps, HALF)
        assert restricted(Fraction(1, 4)) is None
        assert r_alpha_equal(restricted, eps, HALF)


class TestGroundMap:
    """기저 집합 사상 테스트"""

    def test_images(self):
        x = GroundSet(("a", "b", "c"))
        y = GroundSet(("u", "v"))
        f = GroundMap.from_labels(x, y, {"a": "u", "b": "u", "c": "v"})
        assert f.image_mask(x.mask_of(["a", "b"])) == y.mask_of(["u"])
        assert f.preimage_mask(y.mask_of(["u"])) == x.mask_of(["a", "b"])
        assert f.is_surjective and not f.is_injective

    def test_unknown_label(self):
        with pytest.raises(GroundSetMismatch):
            GroundSet(("a",)).index("z")


class TestGroupFiltration:
    """점진적 원소 군 𝒢 테스트"""

    def test_product_and_inverse(self):
        z6 = cyclic(6)
        eps = GradualElement.from_pieces([
            (IntervalPiece(0, HALF, False, True), 1),
            (IntervalPiece(HALF, ONE, False, True), 0),
        ])
        product = group_product(eps, group_inverse(eps, z6), z6)
        assert product == group_identity(z6)

    def test_filtration(self):
        z6 = cyclic(6)
        eps = GradualElement.from_pieces([
            (IntervalPiece(0, HALF, False, True), 2),
            (IntervalPiece(HALF, ONE, False, True), 0),
        ])
        assert in_filtration_subgroup(eps, Fraction(3, 4), z6)
        assert not in_filtration_subgroup(eps, HALF, z6)


class TestRAlphaProperties:
    """R_α 동치 관계와 점별 연산 호환성"""

    @given(s3_elements, s3_elements, levels, levels)
    def test_monotone_in_alpha(self, first, second, alpha, beta):
        low, high = sorted((alpha, beta))
        if r_alpha_equal(first, second, low):
            assert r_alpha_equal(first, second, high)
        assert r_alpha_equal(first, splice(first, second, low), high)

    @given(s3_elements, s3_elements, s3_elements, levels)
    def test_equivalence_relation(self, first, second, third, alpha):
        assert r_alpha_equal(first, first, alpha)
        assert r_alpha_equal(first, second, alpha) == r_alpha_equal(second, first, alpha)
        left, right = splice(first, second, alpha), splice(first, third, alpha)
        assert r_alpha_equal(left, first, alpha) and r_alpha_equal(first, right, alpha)
        assert r_alpha_equal(left, right, alpha)
        if r_alpha_equal(first, second, alpha) and r_alpha_equal(second, third, alpha):
            assert r_alpha_equal(first, third, alpha)

    @given(s3_elements, s3_elements, s3_elements, s3_elements, levels)
    def test_compatible_with_pointwise_ops(self, first, second, noise1, noise2, alpha):
        first_alt, second_alt = splice(first, noise1, alpha), splice(second, noise2, alpha)
        product = pointwise_op(first, second, S3.multiply)
        product_alt = pointwise_op(first_alt, second_alt, S3.multiply)
        assert r_alpha_equal(product, product_alt, alpha)
        assert r_alpha_equal(group_inverse(first, S3), group_inverse(first_alt, S3), alpha)

    @given(s3_elements, s3_elements, levels)
    def test_no_extension_gap_on_shared_domain(self, first, second, alpha):
        """같은 정의역 [α,1] 을 갖는 부분 원소에서는 확장이 준동형"""
        left, right = restrict_to(first, alpha), restrict_to(second, alpha)
        assert not extension_homomorphism_gap(left, right, S3.multiply)
        assert extend(left) == splice(first, GradualElement.constant(first(alpha)), alpha)


class TestGroupLaws:
    """점진적 원소 군 𝒢 와 정규 부분군 𝒢_α"""

    @given(s3_elements, s3_elements, s3_elements)
    def test_group_axioms(self, a, b, c):
        e = group_identity(S3)
        assert group_product(group_product(a, b, S3), c, S3) == group_product(a, group_product(b, c, S3), S3)
        assert group_product(a, e, S3) == a == group_product(e, a, S3)
        assert group_product(a, group_inverse(a, S3), S3) == e
        assert group_product(group_inverse(a, S3), a, S3) == e

    @given(s3_elements, s3_elements, s3_elements, levels, levels)
    def test_filtration_is_normal_subgroup(self, g, noise1, noise2, alpha, beta):
        e = group_identity(S3)
        first, second = splice(e, noise1, alpha), splice(e, noise2, alpha)
        assert in_filtration_subgroup(e, alpha, S3)
        assert in_filtration_subgroup(first, alpha, S3)
        assert in_filtration_subgroup(group_product(first, second, S3), alpha, S3)
        assert in_filtration_subgroup(group_inverse(first, S3), alpha, S3)
        conjugated = group_product(group_product(g, first, S3), group_inverse(g, S3), S3)
        assert in_filtration_subgroup(conjugated, alpha, S3)
        if alpha <= beta:
            assert in_filtration_subgroup(first, beta, S3)

    @given(s3_elements, levels)
    def test_filtration_membership_is_r_alpha_to_identity(self, eps, alpha):
        assert in_filtration_subgroup(eps, alpha, S3) == r_alpha_equal(eps, group_identity(S3), alpha)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])

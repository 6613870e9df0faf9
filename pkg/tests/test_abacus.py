import pytest

from conftest import partitions_up_to, symmetric_up_to
from diaghooks.abacus import (
    HookSide,
    classify_p_hook,
    from_core_and_quotient,
    is_p_core,
    is_symmetric_quotient,
    p_core,
    p_quotient,
    render_ascii,
    to_abacus,
)
from diaghooks.beta import BetaHook, BetaSet, axis_of, beta_of, young_hook
from diaghooks.errors import (
    BadModulus,
    NonEmptyCore,
    NotACore,
    NotAPHook,
    NotSymmetric,
    WrongQuotientLength,
)
from diaghooks.partitions import Partition, all_hooks

P = Partition


def _p_hooks(la, p):
    x = to_abacus(la, p).beads
    return [BetaHook(b - p, b) for b in x.beads if b >= p and (b - p) not in x]


class TestLayout:
    def test_staircase(self):
        ab = to_abacus(P((3, 2, 1)), 3)
        assert ab.beads.beads == (1, 3, 5)
        assert [r.beads for r in ab.runners] == [(1,), (0,), (1,)]

    def test_empty_partition_gets_one_full_row(self):
        assert to_abacus(P(()), 5).beads.beads == (0, 1, 2, 3, 4)

    def test_spike(self):
        assert to_abacus(P((4, 1, 1, 1)), 3).beads.beads == (0, 1, 3, 4, 5, 9)

    def test_bad_modulus(self):
        with pytest.raises(BadModulus):
            to_abacus(P((1,)), 1)
        with pytest.raises(BadModulus):
            to_abacus(P((1,)), 3, bead_count=4)


class TestCore:
    def test_examples(self):
        assert p_core(P((3, 2, 1)), 3) == P(())
        assert p_core(P((4, 1, 1, 1)), 3) == P((1,))

    def test_core_is_fixed_point(self):
        for la in partitions_up_to(12):
            for p in (2, 3, 5):
                core = p_core(la, p)
                assert p_core(core, p) == core
                assert is_p_core(core, p)

    def test_direct_check_matches_push_up(self):
        for la in partitions_up_to(12):
            for p in (2, 3, 5):
                assert is_p_core(la, p) == (p_core(la, p) == la)

    def test_direct_check_matches_young_scan(self):
        for la in partitions_up_to(12):
            for p in (2, 3, 5):
                has_p_hook = any(h.length == p for h in all_hooks(la))
                assert is_p_core(la, p) == (not has_p_hook)


class TestQuotient:
    def test_examples(self):
        assert p_quotient(P((3, 2, 1)), 3) == (P((1,)), P(()), P((1,)))
        assert p_quotient(P((4, 1, 1, 1)), 3) == (P((1,)), P(()), P((1,)))
        assert p_quotient(P(()), 5) == (P(()),) * 5

    def test_weight_identity(self):
        for la in partitions_up_to(14):
            for p in (2, 3, 5):
                core = p_core(la, p)
                quotient = p_quotient(la, p)
                assert la.weight == core.weight + p * sum(c.weight for c in quotient)

    def test_duality(self):
        for la in partitions_up_to(12):
            dual = la.conjugate()
            for p in (2, 3, 5):
                assert p_core(dual, p) == p_core(la, p).conjugate()
                quotient = p_quotient(la, p)
                dual_quotient = p_quotient(dual, p)
                for g in range(p):
                    assert dual_quotient[g] == quotient[p - 1 - g].conjugate()


class TestRebuild:
    def test_examples(self):
        assert from_core_and_quotient(P(()), (P((1,)), P(()), P((1,))), 3) == P((3, 2, 1))
        assert from_core_and_quotient(P((1,)), (P((1,)), P(()), P((1,))), 3) == P((4, 1, 1, 1))
        core = P((2,))  # a 3-core
        assert from_core_and_quotient(core, (P(()),) * 3, 3) == core

    def test_roundtrip(self):
        for la in partitions_up_to(14):
            for p in (2, 3, 5, 7):
                assert from_core_and_quotient(p_core(la, p), p_quotient(la, p), p) == la

    def test_rejects_non_core(self):
        with pytest.raises(NotACore):
            from_core_and_quotient(P((3, 2, 1)), (P(()),) * 3, 3)

    def test_rejects_wrong_length(self):
        with pytest.raises(WrongQuotientLength):
            from_core_and_quotient(P(()), (P(()),) * 2, 3)


class TestSymmetricQuotient:
    def test_examples(self):
        assert is_symmetric_quotient((P((1,)), P(()), P((1,))))
        assert is_symmetric_quotient(
            (P((6, 6, 2)), P(()), P(()), P(()), P((3, 3, 2, 2, 2, 2)))
        )
        assert not is_symmetric_quotient((P((1,)), P(()), P(())))

    def test_explicit_length(self):
        with pytest.raises(WrongQuotientLength):
            is_symmetric_quotient((P(()),) * 3, p=5)

    def test_characterises_symmetry(self):
        for la in partitions_up_to(12):
            for p in (3, 5):
                both = p_core(la, p).is_symmetric and is_symmetric_quotient(p_quotient(la, p))
                assert both == la.is_symmetric


class TestAxisLaws:
    def test_runner_axes_equal_for_empty_core(self):
        # with an empty core and k = m*p beads, every runner axis sits at m - 1/2
        for la in symmetric_up_to(24):
            for p in (3, 5):
                if p_core(la, p):
                    continue
                ab = to_abacus(la, p)
                m = len(ab.beads) // p
                for g in range(p):
                    assert axis_of(ab.runner(g)).two_theta == 2 * m - 1

    def test_runner_axis_relation(self):
        # p*(theta_runner + 1/2) == theta + 1/2, in 2*theta arithmetic
        for la in symmetric_up_to(24):
            for p in (3, 5):
                if p_core(la, p):
                    continue
                ab = to_abacus(la, p)
                total = axis_of(ab.beads).two_theta
                for g in range(p):
                    assert p * (axis_of(ab.runner(g)).two_theta + 1) == total + 1

    def test_per_runner_balance_for_empty_core(self):
        for la in symmetric_up_to(20):
            for p in (3, 5):
                if p_core(la, p):
                    continue
                ab = to_abacus(la, p)
                ax = axis_of(ab.beads)
                for g in range(p):
                    beads_right = sum(1 for b in ab.beads if b % p == g and ax.is_right(b))
                    spaces_left = sum(
                        1 for pos in range(g, ax.last_left + 1, p) if pos not in ab.beads
                    )
                    assert beads_right == spaces_left


class TestClassify:
    def test_straddling_examples(self):
        got = classify_p_hook(P((3, 2, 1)), 3, BetaHook(0, 3))
        assert (got.side, got.runner, got.row) == (HookSide.STRADDLING, 0, 1)
        got = classify_p_hook(P((3, 2, 1)), 3, BetaHook(2, 5))
        assert (got.side, got.runner, got.row) == (HookSide.STRADDLING, 2, 1)

    def test_one_sided_examples(self):
        la = from_core_and_quotient(P(()), (P((2,)), P(()), P((1, 1))), 3)
        assert la == P((4, 4, 2, 2))
        kinds = {classify_p_hook(la, 3, h).side for h in _p_hooks(la, 3)}
        assert kinds == {HookSide.RIGHT_OF_AXIS, HookSide.LEFT_OF_AXIS}

    def test_errors(self):
        with pytest.raises(NotSymmetric):
            classify_p_hook(P((6, 6, 2)), 3, BetaHook(0, 3))
        with pytest.raises(NonEmptyCore):
            classify_p_hook(P((4, 1, 1, 1)), 3, BetaHook(0, 3))
        with pytest.raises(NotAPHook):
            classify_p_hook(P((3, 2, 1)), 3, BetaHook(0, 5))

    def test_side_matches_quotient_cell(self):
        # straddling <-> diagonal, right <-> arm, left <-> leg of the runner component
        for la in symmetric_up_to(18):
            for p in (3, 5):
                if p_core(la, p):
                    continue
                ab = to_abacus(la, p)
                for h in _p_hooks(la, p):
                    got = classify_p_hook(la, p, h)
                    runner = ab.runner(got.runner)
                    cell = young_hook(runner, BetaHook(got.row - 1, got.row))
                    assert cell.length == 1
                    if got.side is HookSide.STRADDLING:
                        assert cell.row == cell.col
                    elif got.side is HookSide.RIGHT_OF_AXIS:
                        assert cell.col > cell.row
                    else:
                        assert cell.row > cell.col


class TestRender:
    def test_staircase(self):
        assert render_ascii(P((3, 2, 1)), 3) == "· ● ·\n─────\n● · ●"

    def test_empty(self):
        assert render_ascii(P(()), 3) == "● ● ●\n─────"

    def test_spike(self):
        assert render_ascii(P((4, 1, 1, 1)), 3) == "● ● ·\n● ● ●\n─────\n· · ·\n● · ·"

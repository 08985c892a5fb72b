import random

import pytest

from corekit.abacus import (
    BetaSet,
    TAbacus,
    beta_with_length,
    decompose,
    partition_from_beta,
    reconstruct,
    remove_one_hook,
    t_core,
    t_quotient,
    to_t_abacus,
)
from corekit.catalan import kappa_pair, kappa_triple, pair_quotient, staircase
from corekit.partitions import Partition

from conftest import gen_partitions, oracle_is_t_core, random_parts

FIG3_BEADS = frozenset({1, 2, 3, 4, 5, 6, 10, 11, 12, 13, 19, 20})
FIG4_BEADS = frozenset(range(1, 9)) | frozenset(range(12, 18)) | frozenset(range(23, 27)) | {34, 35}


class TestBetaSet:
    def test_round_trip_with_partition(self, rng):
        for _ in range(300):
            lam = Partition(random_parts(rng, 60))
            assert BetaSet.from_partition(lam).to_partition() == lam

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            BetaSet({-1, 2})

    def test_padding_does_not_change_partition(self, rng):
        for _ in range(100):
            lam = Partition(random_parts(rng, 40))
            length = len(lam) + rng.randint(0, 10)
            assert partition_from_beta(beta_with_length(lam, length)) == lam

    def test_duplicate_beads_rejected(self):
        with pytest.raises(ValueError):
            partition_from_beta([3, 3])


class TestTAbacus:
    def test_triple_core_k4_beads(self):
        ab = to_t_abacus(kappa_triple(4), 8)
        assert ab.beads == FIG3_BEADS

    def test_empty(self):
        assert to_t_abacus(Partition(()), 5).beads == frozenset()

    def test_triple_core_k5_beads(self):
        ab = to_t_abacus(kappa_triple(5), 10)
        assert ab.beads == FIG4_BEADS

    def test_geometry(self):
        ab = TAbacus(8, FIG3_BEADS)
        assert ab.rows == 3
        assert ab.runner_rows(3) == (0, 1, 2)
        assert ab.runner_rows(0) == ()
        assert ab.runner_rows(5) == (0, 1)
        assert ab.runner_rows(6) == (0,)
        with pytest.raises(ValueError):
            ab.runner_rows(8)

    def test_invalid_t(self):
        with pytest.raises(ValueError):
            to_t_abacus(Partition((1,)), 1)

    def test_json(self):
        ab = TAbacus(8, FIG3_BEADS)
        assert ab.to_json() == {"t": 8, "beads": sorted(FIG3_BEADS)}

    def test_core_criterion_no_spacer_below_bead(self, rng):
        # spacer below a bead on some runner <=> a hook of length t exists
        for _ in range(200):
            parts = random_parts(rng, 40)
            t = rng.randint(2, 9)
            ab = to_t_abacus(Partition(parts), t)
            pushed = all(
                rows == tuple(range(len(rows)))
                for rows in (ab.runner_rows(g) for g in range(t))
            )
            assert pushed == oracle_is_t_core(parts, t)


class TestTCore:
    def test_two_core_of_square(self):
        assert t_core(Partition((2, 2)), 2) == Partition(())

    def test_idempotent_and_fixed_point(self, rng):
        for _ in range(200):
            lam = Partition(random_parts(rng, 50))
            t = rng.randint(2, 9)
            core = t_core(lam, t)
            assert t_core(core, t) == core

    def test_pair_core_has_empty_even_core(self):
        assert t_core(kappa_pair(4), 8) == Partition(())

    def test_core_never_contains_t_hook(self, rng):
        for _ in range(200):
            lam = Partition(random_parts(rng, 50))
            t = rng.randint(2, 9)
            assert oracle_is_t_core(t_core(lam, t).parts, t)

    def test_random_hook_removal_orders_agree(self, rng):
        # bead push-down must match repeated diagram-level rim-hook removal
        for _ in range(60):
            lam = Partition(random_parts(rng, 50))
            t = rng.randint(2, 9)
            expected = t_core(lam, t)
            for _ in range(5):
                cur = lam
                while True:
                    cells = [c for c in cur.cells() if cur.hook_length(c) == t]
                    if not cells:
                        break
                    cur = remove_one_hook(cur, rng.choice(cells))
                assert cur == expected

    def test_invalid_t(self):
        with pytest.raises(ValueError):
            t_core(Partition((1,)), 0)


class TestTQuotient:
    def test_pair_core_k4_palindrome(self):
        expected = (
            staircase(3), staircase(2), staircase(1), Partition(()),
            Partition(()), staircase(1), staircase(2), staircase(3),
        )
        assert t_quotient(kappa_pair(4), 8) == expected

    def test_pair_core_k5_palindrome(self):
        assert t_quotient(kappa_pair(5), 10) == pair_quotient(5)

    def test_core_has_trivial_quotient(self, rng):
        for _ in range(100):
            t = rng.randint(2, 9)
            core = t_core(Partition(random_parts(rng, 50)), t)
            assert t_quotient(core, t) == (Partition(()),) * t

    def test_size_identity_with_factor_t(self, rng):
        for _ in range(500):
            lam = Partition(random_parts(rng, 80))
            t = rng.randint(2, 12)
            dec = decompose(lam, t)
            assert lam.size == dec.core.size + t * sum(q.size for q in dec.quotient)
            assert dec.combined_size() == lam.size


class TestReconstruct:
    def test_pair_core_k4(self):
        lam = reconstruct(Partition(()), pair_quotient(4), 8)
        assert lam == kappa_pair(4)
        assert lam.size == 160

    def test_core_with_trivial_quotient(self, rng):
        for _ in range(100):
            t = rng.randint(2, 9)
            core = t_core(Partition(random_parts(rng, 50)), t)
            assert reconstruct(core, (Partition(()),) * t, t) == core

    def test_search_oracle_for_size_two(self):
        # the only partition of size 2 whose 2-quotient is (empty, (1))
        target = (Partition(()), Partition((1,)))
        matches = [
            Partition(parts)
            for parts in gen_partitions(2)
            if t_quotient(Partition(parts), 2) == target
        ]
        assert matches == [Partition((2,))]
        assert reconstruct(Partition(()), target, 2) == Partition((2,))

    def test_round_trip(self, rng):
        for _ in range(500):
            lam = Partition(random_parts(rng, 80))
            t = rng.randint(2, 12)
            assert reconstruct(t_core(lam, t), t_quotient(lam, t), t) == lam

    def test_rejects_non_core(self):
        with pytest.raises(ValueError):
            reconstruct(Partition((2,)), (Partition(()), Partition(())), 2)

    def test_rejects_wrong_arity(self):
        with pytest.raises(ValueError):
            reconstruct(Partition(()), (Partition(()),), 2)


class TestRemoveOneHook:
    def test_examples(self):
        assert remove_one_hook(Partition((2, 2)), (1, 0)) == Partition((2,))
        assert remove_one_hook(Partition((1,)), (0, 0)) == Partition(())
        assert remove_one_hook(Partition((3, 2, 1)), (0, 0)) == Partition((1,))

    def test_out_of_diagram(self):
        with pytest.raises(ValueError):
            remove_one_hook(Partition((2,)), (1, 0))

    def test_size_drops_by_hook_length(self, rng):
        for _ in range(200):
            lam = Partition(random_parts(rng, 40))
            if not lam:
                continue
            cells = list(lam.cells())
            cell = rng.choice(cells)
            out = remove_one_hook(lam, cell)
            assert out.size == lam.size - lam.hook_length(cell)

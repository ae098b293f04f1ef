"""Exact solver: level searches, iterative deepening, budgets, oracle checks."""

import pytest

from gridcast import (
    BroadcastParams,
    BudgetExhaustedError,
    Coord,
    GridDims,
    SearchBudget,
    TowerSet,
    check_broadcast,
    construct,
    exact_gamma,
    find_broadcast_of_size,
    lower_t2,
)
from naive_oracle import naive_gamma


class TestFindBroadcastOfSize:
    def test_single_tower_path(self):
        witness, _ = find_broadcast_of_size(GridDims(5, 1), BroadcastParams(4, 2), 1)
        assert witness == TowerSet([Coord(2, 0)])

    def test_empty_set_never_suffices(self):
        witness, nodes = find_broadcast_of_size(GridDims(5, 1), BroadcastParams(4, 2), 0)
        assert witness is None
        assert nodes == 0

    def test_one_tower_cannot_cover_3x3(self):
        witness, _ = find_broadcast_of_size(GridDims(3, 3), BroadcastParams(3, 2), 1)
        assert witness is None

    def test_rejects_negative_k(self):
        with pytest.raises(ValueError):
            find_broadcast_of_size(GridDims(2, 2), BroadcastParams(3, 2), -1)

    def test_budget_error_carries_node_count(self):
        with pytest.raises(BudgetExhaustedError) as exc_info:
            find_broadcast_of_size(
                GridDims(4, 4), BroadcastParams(3, 2), 3, SearchBudget(max_nodes=2)
            )
        assert exc_info.value.nodes_expanded == 2


class TestExactGamma:
    @pytest.mark.parametrize(
        "m,n,t,r,expected",
        [(5, 1, 4, 2, 1), (17, 1, 4, 2, 3), (3, 3, 3, 2, 2), (1, 1, 3, 2, 1)],
    )
    def test_known_values(self, m, n, t, r, expected):
        result = exact_gamma(GridDims(m, n), BroadcastParams(t, r))
        assert result.status == "optimal"
        assert result.gamma == expected

    def test_witnesses_are_deterministic(self):
        first = exact_gamma(GridDims(3, 3), BroadcastParams(3, 2))
        second = exact_gamma(GridDims(3, 3), BroadcastParams(3, 2))
        assert first.witness == second.witness == TowerSet([Coord(0, 1), Coord(2, 1)])

    def test_path_witness_matches_construction(self):
        result = exact_gamma(GridDims(17, 1), BroadcastParams(4, 2))
        assert result.witness == TowerSet([Coord(2, 0), Coord(8, 0), Coord(14, 0)])

    def test_budget_exhaustion_reported(self):
        result = exact_gamma(
            GridDims(3, 3), BroadcastParams(3, 2), SearchBudget(max_nodes=2)
        )
        assert result.status == "budget_exhausted"
        assert result.gamma is None
        assert result.witness is None
        assert result.nodes_expanded >= 2

    def test_wall_clock_budget(self):
        result = exact_gamma(
            GridDims(6, 6), BroadcastParams(3, 2), SearchBudget(max_seconds=0.0)
        )
        assert result.status == "budget_exhausted"

    def test_infeasible_parameters_rejected(self):
        # strength 1 cannot deliver 2 signal anywhere, whatever the set
        with pytest.raises(ValueError, match="no .* broadcast exists"):
            exact_gamma(GridDims(2, 2), BroadcastParams(1, 2))

    @pytest.mark.parametrize("m,n", [(1, 7), (2, 3), (3, 3), (4, 2), (4, 4)])
    @pytest.mark.parametrize("t,r", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 2)])
    def test_matches_naive_enumeration(self, m, n, t, r):
        result = exact_gamma(GridDims(m, n), BroadcastParams(t, r))
        assert result.status == "optimal"
        assert result.gamma == naive_gamma(m, n, t, r)

    @pytest.mark.parametrize("m,n,t", [(4, 4, 3), (5, 5, 3), (6, 6, 4), (5, 3, 4)])
    def test_sandwich_between_bounds(self, m, n, t):
        dims = GridDims(m, n)
        result = exact_gamma(dims, BroadcastParams(t, 2))
        assert result.status == "optimal"
        assert lower_t2(m, n, t) <= result.gamma <= len(construct(dims, t))

    @pytest.mark.parametrize("m,n,t,r", [(4, 4, 3, 2), (5, 2, 4, 2), (3, 3, 2, 2)])
    def test_witness_passes_verifier(self, m, n, t, r):
        result = exact_gamma(GridDims(m, n), BroadcastParams(t, r))
        assert check_broadcast(GridDims(m, n), BroadcastParams(t, r), result.witness).valid

    def test_starts_below_the_r1_optimum(self):
        # the (t,2) lower bound does not apply when r=1: here gamma is 4
        # while the r=2 bound would have started the search at 5
        result = exact_gamma(GridDims(6, 6), BroadcastParams(3, 1))
        assert result.gamma == naive_gamma(6, 6, 3, 1) == 4
        assert result.gamma < lower_t2(6, 6, 3)


class TestSearchBudget:
    def test_rejects_nonpositive_cap(self):
        with pytest.raises(ValueError):
            SearchBudget(max_nodes=0)

    def test_default_cap(self):
        assert SearchBudget().max_nodes == 10_000_000

#info to run only one test
#python -m unittest lockerutils.solver_tools.tests.test_solver_tools.TestStringMethods.test_bb_matches_bruteforce

import itertools
import math
import time
import unittest
import numpy as np
from hypothesis import given, settings, strategies as st

import lockerutils.instance_tools as instance_tools
import lockerutils.choice_tools as choice_tools
import lockerutils.solver_tools as solver_tools
from lockerutils.errors import SolverRefusal, ValidationError

GAMMAS = [0., 0.5, 1., 2., 5., math.inf]
EXACT = solver_tools.SolveConfig(gap_tolerance=1e-14)


def one_zone(row, gamma):
    return instance_tools.Instance(zones=[instance_tools.Zone(0, 1.)],
                                   lockers=[instance_tools.Locker(jj) for jj in range(len(row))],
                                   attraction=[row],
                                   outside_attraction=[1.],
                                   gamma=gamma)


def random_instance(m, n, seed, gamma):
    spec = instance_tools.GeneratorSpec(zone_count=m, locker_count=n, square_side=5., seed=seed, gamma=gamma)
    return instance_tools.generate(spec)


@st.composite
def small_instances(draw, max_zones=15, max_lockers=12):
    m = draw(st.integers(1, max_zones))
    n = draw(st.integers(1, max_lockers))
    seed = draw(st.integers(0, 2 ** 32))
    gamma = draw(st.sampled_from(GAMMAS))
    inst = random_instance(m, n, seed, gamma)
    level = draw(st.sampled_from([0., 0.01, 0.2]))
    return inst, level * inst.total_demand / n


def exhaustive_best_sum(row, gamma, available):
    """ Largest exact attraction sum over every antichain of the available lockers """
    values = np.array([row[jj] for jj in available])
    kk = len(available)
    masks = ((np.arange(1, 1 << kk)[:, np.newaxis] >> np.arange(kk)) & 1).astype(bool)
    high = np.where(masks, values, -np.inf).max(axis=1)
    low = np.where(masks, values, np.inf).min(axis=1)
    antichain = ~(high > (1. + gamma) * low)
    sums = masks[antichain] @ values
    near = masks[antichain][sums >= sums.max() * (1. - 1e-9)]
    return max(math.fsum(values[mask]) for mask in near)


class TestStringMethods(unittest.TestCase):

    def test_best_restriction_example(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        self.assertEqual(solver_tools.best_restriction(inst, 0, [0, 1, 2]), ((0, 1), 4.))

    def test_best_restriction_singleton(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        self.assertEqual(solver_tools.best_restriction(inst, 1, [2]), ((2,), 3.1))

    def test_best_restriction_empty(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        self.assertEqual(solver_tools.best_restriction(inst, 0, []), ((), 0.))

    def test_best_restriction_middle_window(self):
        inst = one_zone([10., 6., 5., 1.], gamma=0.2)
        self.assertEqual(solver_tools.best_restriction(inst, 0, range(4)), ((1, 2), 11.))

    def test_window_sums_match_best_restriction(self):
        inst = random_instance(6, 9, seed=3, gamma=0.5)
        mask = np.array([1, 0, 1, 1, 0, 1, 1, 1, 0], dtype=bool)
        sums, allowed = solver_tools.window_sums(inst, mask)
        for ii in range(inst.m):
            chosen, total = solver_tools.best_restriction(inst, ii, np.flatnonzero(mask))
            self.assertEqual(tuple(np.flatnonzero(allowed[ii])), chosen)
            self.assertAlmostEqual(sums[ii], total, places=12)

    def test_restriction_tolerance(self):
        # 1.5000001 dominates 1 at gamma 0.5 unless rtol absorbs the difference
        inst = one_zone([1., 1.5000001], gamma=0.5)
        self.assertEqual(solver_tools.best_restriction(inst, 0, [0, 1]), ((1,), 1.5000001))
        chosen, total = solver_tools.best_restriction(inst, 0, [0, 1], rtol=1e-6)
        self.assertEqual(chosen, (0, 1))
        self.assertAlmostEqual(total, 2.5000001, places=12)
        self.assertIsNotNone(choice_tools.antichain_violation(inst, 0, chosen))
        self.assertIsNone(choice_tools.antichain_violation(inst, 0, chosen, rtol=1e-6))
        sums, allowed = solver_tools.window_sums(inst, np.ones(2, dtype=bool), rtol=1e-6)
        self.assertEqual(allowed.tolist(), [[True, True]])
        self.assertAlmostEqual(sums[0], 2.5000001, places=12)
        sums, allowed = solver_tools.window_sums(inst, np.ones(2, dtype=bool))
        self.assertEqual(allowed.tolist(), [[False, True]])
        with self.assertRaises(ValueError):
            solver_tools.best_restriction(inst, 0, [0, 1], rtol=-1.)
        with self.assertRaises(ValueError):
            solver_tools.window_sums(inst, np.ones(2, dtype=bool), rtol=-1.)

    @settings(max_examples=500, derandomize=True, deadline=None)
    @given(st.lists(st.floats(min_value=0.01, max_value=100.), min_size=1, max_size=14),
           st.sampled_from(GAMMAS), st.data())
    def test_best_restriction_is_best_antichain(self, row, gamma, data):
        inst = one_zone(row, gamma)
        available = sorted(data.draw(st.sets(st.integers(0, len(row) - 1), min_size=1)))
        chosen, total = solver_tools.best_restriction(inst, 0, available)
        self.assertIsNone(choice_tools.antichain_violation(inst, 0, chosen))
        self.assertEqual(total, exhaustive_best_sum(inst.attraction[0], gamma, available))

    def test_root_bound_example(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        self.assertAlmostEqual(solver_tools.node_bound(inst, 0., solver_tools.NodeState.root(3)), 50., places=12)

    def test_leaf_bound_is_exact(self):
        inst = random_instance(5, 6, seed=11, gamma=1.)
        node = solver_tools.NodeState({0, 3, 4}, {1, 2, 5}, set())
        _, res = solver_tools.evaluate_location(inst, choice_tools.LocationDecision.from_indices(6, [0, 3, 4]), 0.3)
        self.assertAlmostEqual(solver_tools.node_bound(inst, 0.3, node), res.profit, places=9)

    def test_closing_never_raises_bound(self):
        inst = random_instance(5, 6, seed=12, gamma=0.5)
        parent = solver_tools.NodeState({0}, set(), {1, 2, 3, 4, 5})
        child = solver_tools.NodeState({0}, {1}, {2, 3, 4, 5})
        self.assertLessEqual(solver_tools.node_bound(inst, 0.1, child),
                             solver_tools.node_bound(inst, 0.1, parent) + 1e-12)

    def test_node_state_partition(self):
        with self.assertRaises(ValidationError):
            solver_tools.NodeState({0, 1}, {1}, {2})

    @settings(max_examples=100, derandomize=True, deadline=None)
    @given(small_instances(max_zones=6, max_lockers=8), st.data())
    def test_bound_is_valid(self, case, data):
        inst, cost = case
        states = data.draw(st.lists(st.sampled_from(['open', 'closed', 'free']), min_size=inst.n, max_size=inst.n))
        node = solver_tools.NodeState([jj for jj, ss in enumerate(states) if ss == 'open'],
                                      [jj for jj, ss in enumerate(states) if ss == 'closed'],
                                      [jj for jj, ss in enumerate(states) if ss == 'free'])
        bound = solver_tools.node_bound(inst, cost, node)
        free = sorted(node.free)
        for size in range(len(free) + 1):
            for extra in itertools.combinations(free, size):
                location = choice_tools.LocationDecision.from_indices(inst.n, list(node.committed_open) + list(extra))
                _, res = solver_tools.evaluate_location(inst, location, cost)
                self.assertLessEqual(res.profit, bound + 1e-9)

    def test_bb_example_with_costs(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        res = solver_tools.solve_bb(inst, costs=0.1, config=EXACT)
        self.assertEqual(res.location.indices, (0, 1))
        self.assertAlmostEqual(res.profit, 49.8, places=9)
        self.assertEqual(res.status, solver_tools.OPTIMAL)
        self.assertGreaterEqual(res.upper_bound, res.profit - 1e-9)

    def test_bb_without_heuristic(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        config = solver_tools.SolveConfig(gap_tolerance=1e-14, heuristic=solver_tools.NO_HEURISTIC,
                                          branching_rule=solver_tools.LOWEST_INDEX)
        res = solver_tools.solve_bb(inst, costs=0.1, config=config)
        self.assertAlmostEqual(res.profit, 49.8, places=9)

    def test_bb_expensive_lockers_stay_closed(self):
        inst = random_instance(6, 5, seed=4, gamma=1.)
        res = solver_tools.solve_bb(inst, costs=2. * inst.total_demand, config=EXACT)
        self.assertEqual(res.location.count, 0)
        self.assertEqual(res.profit, 0.)

    def test_bb_mnl_opens_everything(self):
        inst = instance_tools.choice_overload_example(gamma=math.inf)
        res = solver_tools.solve_bb(inst, costs=0., config=EXACT)
        self.assertEqual(res.location.indices, (0, 1, 2))

    def test_bb_no_lockers(self):
        inst = instance_tools.Instance(zones=[instance_tools.Zone(0, 5.)], lockers=[],
                                       attraction=np.zeros((1, 0)), outside_attraction=[1.], gamma=1.)
        self.assertEqual(solver_tools.solve_bb(inst).profit, 0.)
        self.assertEqual(solver_tools.solve_bruteforce(inst).profit, 0.)

    def test_bruteforce_example(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        res = solver_tools.solve_bruteforce(inst, costs=0.)
        self.assertAlmostEqual(res.profit, 50., places=9)
        self.assertEqual(res.gap, 0.)
        self.assertEqual(res.nodes_explored, 8)
        res = solver_tools.solve_bruteforce(inst, costs=0.1)
        self.assertEqual(res.location.indices, (0, 1))
        self.assertAlmostEqual(res.profit, 49.8, places=9)

    def test_bruteforce_refuses_large_instances(self):
        inst = random_instance(2, solver_tools.MAX_LOCKERS + 1, seed=0, gamma=1.)
        with self.assertRaises(SolverRefusal):
            solver_tools.solve_bruteforce(inst)

    @settings(max_examples=200, derandomize=True, deadline=None)
    @given(small_instances())
    def test_bb_matches_bruteforce(self, case):
        inst, cost = case
        exact = solver_tools.solve_bruteforce(inst, cost)
        res = solver_tools.solve_bb(inst, cost, EXACT)
        self.assertAlmostEqual(res.profit, exact.profit, delta=1e-9)
        self.assertGreaterEqual(res.upper_bound, res.profit - 1e-9)
        self.assertEqual(res.status, solver_tools.OPTIMAL)

    def test_lowest_index_rule_agrees(self):
        inst = random_instance(10, 9, seed=21, gamma=2.)
        config = solver_tools.SolveConfig(gap_tolerance=1e-14, branching_rule=solver_tools.LOWEST_INDEX)
        self.assertAlmostEqual(solver_tools.solve_bb(inst, 0.5, config).profit,
                               solver_tools.solve_bruteforce(inst, 0.5).profit, delta=1e-9)

    def test_profit_grows_with_gamma(self):
        base = random_instance(12, 8, seed=5, gamma=0.)
        cost = 0.02 * base.total_demand / base.n
        profits = [solver_tools.solve_bruteforce(base.with_gamma(gamma), cost).profit for gamma in GAMMAS]
        for low, high in zip(profits, profits[1:]):
            self.assertLessEqual(low, high + 1e-9)

    def test_single_thread_is_reproducible(self):
        inst = random_instance(20, 12, seed=8, gamma=1.)
        first = solver_tools.solve_bb(inst, 1., EXACT)
        second = solver_tools.solve_bb(inst, 1., EXACT)
        self.assertEqual(first.nodes_explored, second.nodes_explored)
        self.assertEqual(first.to_dict(), second.to_dict())

    def test_threads_agree_in_value(self):
        inst = random_instance(20, 12, seed=9, gamma=2.)
        config = solver_tools.SolveConfig(gap_tolerance=1e-14, threads=3)
        self.assertAlmostEqual(solver_tools.solve_bb(inst, 1., config).profit,
                               solver_tools.solve_bb(inst, 1., EXACT).profit, delta=1e-9)

    def test_node_limit(self):
        inst = random_instance(8, 8, seed=1, gamma=1.)
        config = solver_tools.SolveConfig(gap_tolerance=1e-14, node_limit=1, heuristic=solver_tools.NO_HEURISTIC)
        res = solver_tools.solve_bb(inst, 0., config)
        self.assertEqual(res.status, solver_tools.NODE_LIMIT)
        self.assertEqual(res.nodes_explored, 1)
        self.assertGreaterEqual(res.upper_bound, solver_tools.solve_bruteforce(inst, 0.).profit - 1e-9)
        self.assertAlmostEqual(res.gap, solver_tools.relative_gap(res.upper_bound, res.profit), places=15)

    def test_time_limit(self):
        inst = random_instance(8, 8, seed=2, gamma=1.)
        config = solver_tools.SolveConfig(time_limit_seconds=1e-9, heuristic=solver_tools.NO_HEURISTIC)
        res = solver_tools.solve_bb(inst, 0., config)
        self.assertEqual(res.status, solver_tools.TIME_LIMIT)
        self.assertGreaterEqual(res.upper_bound, res.profit)

    def test_time_limit_covers_heuristic(self):
        inst = instance_tools.generate(instance_tools.ds1_spec(seed=42)).with_gamma(2.)
        config = solver_tools.SolveConfig(gap_tolerance=0.01, time_limit_seconds=0.5)
        self.assertEqual(config.heuristic, solver_tools.GREEDY_LOCAL_SEARCH)
        res = solver_tools.solve_bb(inst, 500., config)
        self.assertEqual(res.status, solver_tools.TIME_LIMIT)
        self.assertLess(res.wall_time_seconds, 10.)
        self.assertGreaterEqual(res.profit, 0.)
        self.assertGreaterEqual(res.upper_bound, res.profit)
        self.assertAlmostEqual(res.gap, solver_tools.relative_gap(res.upper_bound, res.profit), places=15)

    def test_greedy_deadline(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        # past deadline: only the all closed start is evaluated
        late = solver_tools.greedy_local_search(inst, 0.1, deadline=time.monotonic() - 1.)
        self.assertEqual(late.indices, ())
        on_time = solver_tools.greedy_local_search(inst, 0.1, deadline=time.monotonic() + 60.)
        self.assertEqual(on_time.indices, (0, 1))

    def test_gap_limit(self):
        inst = random_instance(15, 12, seed=6, gamma=1.)
        config = solver_tools.SolveConfig(gap_tolerance=0.5, heuristic=solver_tools.NO_HEURISTIC)
        res = solver_tools.solve_bb(inst, 0.5, config)
        self.assertIn(res.status, (solver_tools.GAP_LIMIT, solver_tools.OPTIMAL))
        self.assertLessEqual(res.gap, 0.5 + 1e-12)
        self.assertGreaterEqual(res.upper_bound, solver_tools.solve_bruteforce(inst, 0.5).profit - 1e-9)

    def test_greedy_example(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        self.assertEqual(solver_tools.greedy_local_search(inst, 0.1).indices, (0, 1))
        self.assertEqual(solver_tools.greedy_local_search(inst, 1000.).indices, ())

    def test_greedy_never_worse_than_empty(self):
        inst = random_instance(10, 10, seed=13, gamma=0.5)
        location = solver_tools.greedy_local_search(inst, 5.)
        _, res = solver_tools.evaluate_location(inst, location, 5.)
        self.assertGreaterEqual(res.profit, 0.)

    def test_result_restriction_is_consistent(self):
        inst = random_instance(10, 8, seed=14, gamma=0.5)
        res = solver_tools.solve_bb(inst, 0.2, EXACT)
        res.restriction.check_consistent(res.location)
        again = choice_tools.profit(inst, res.location, res.restriction, 0.2)
        self.assertEqual(again.profit, res.profit)
        record = res.to_dict()
        self.assertEqual(record['facility_count'], res.location.count)
        self.assertEqual(len(record['y']), inst.m)

    def test_config_validation(self):
        with self.assertRaises(ValidationError):
            solver_tools.SolveConfig(gap_tolerance=0.)
        with self.assertRaises(ValidationError):
            solver_tools.SolveConfig(threads=0)
        with self.assertRaises(ValidationError):
            solver_tools.SolveConfig(branching_rule='RANDOM')


if __name__ == '__main__':
    unittest.main()

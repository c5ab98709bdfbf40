#info to run only one test
#python -m unittest lockerutils.model_tools.tests.test_model_tools.TestStringMethods.test_ip_d_lp_export

import itertools
import math
import unittest
import numpy as np
from hypothesis import given, settings, strategies as st

import lockerutils.instance_tools as instance_tools
import lockerutils.choice_tools as choice_tools
import lockerutils.model_tools as model_tools
import lockerutils.solver_tools as solver_tools
from lockerutils.errors import InstanceParseError


def one_zone(row, gamma, outside=1.):
    return instance_tools.Instance(zones=[instance_tools.Zone(0, 1.)],
                                   lockers=[instance_tools.Locker(jj) for jj in range(len(row))],
                                   attraction=[row],
                                   outside_attraction=[outside],
                                   gamma=gamma)


def row_text(row):
    return ' + '.join(name for name, _ in row.coefs) + ' ' + row.sense + ' ' + str(int(row.rhs))


class TestStringMethods(unittest.TestCase):

    def test_ip_d_example_rows(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        form = model_tools.build_ip_d(inst, costs=0.)
        ddc = {row_text(row) for row in form.rows_named('ddc_')}
        self.assertEqual(ddc, {'y_1_3 + y_1_1 <= 1', 'y_1_3 + y_1_2 <= 1',
                               'y_2_3 + y_2_1 <= 1', 'y_2_3 + y_2_2 <= 1'})
        self.assertEqual(len(form.rows_named('link_')), 6)
        self.assertEqual(form.rows_named('path_'), [])

    def test_ip_d_infinite_gamma(self):
        inst = instance_tools.choice_overload_example(gamma=math.inf)
        self.assertEqual(model_tools.build_ip_d(inst).rows_named('ddc_'), [])

    def test_ip_d_two_lockers(self):
        form = model_tools.build_ip_d(one_zone([4., 1.], gamma=1.))
        self.assertEqual([row_text(row) for row in form.rows_named('ddc_')], ['y_1_1 + y_1_2 <= 1'])

    def test_ip_d_with_paths(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        form = model_tools.build_ip_d(inst, with_paths=True)
        self.assertEqual(len(form.rows_named('path_')), 2)

    def test_ip_a_example(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        form = model_tools.build_ip_a(inst, costs=0.)
        adc = form.rows_named('adc_1_')
        self.assertEqual(len(adc), 1)
        self.assertEqual(dict(adc[0].coefs), {'y_1_3': 2., 'y_1_1': 1., 'y_1_2': 1.})
        self.assertEqual(adc[0].rhs, 2.)
        path = form.rows_named('path_1_')
        self.assertEqual([name for name, _ in path[0].coefs], ['y_1_3', 'y_1_1'])

    def test_ip_a_no_dominance(self):
        form = model_tools.build_ip_a(one_zone([1., 1.2, 1.1], gamma=0.5))
        self.assertEqual(form.rows_named('adc_'), [])
        self.assertEqual(form.rows_named('path_'), [])

    def test_ip_a_chain(self):
        form = model_tools.build_ip_a(one_zone([9., 2., 0.4], gamma=1.))
        self.assertEqual(len(form.rows_named('adc_')), 2)
        paths = form.rows_named('path_')
        self.assertEqual(len(paths), 1)
        self.assertEqual(len(paths[0].coefs), 3)

    def test_ip_a_extra_paths(self):
        inst = one_zone([25., 10., 6., 4.5, 2.5, 1.], gamma=1.)
        self.assertEqual(len(model_tools.build_ip_a(inst, extra_paths=1).rows_named('path_')), 2)

    def test_row_counts(self):
        inst = instance_tools.generate(instance_tools.GeneratorSpec(zone_count=7, locker_count=6,
                                                                    square_side=10., seed=7, gamma=0.5))
        omega_total = sum(len(choice_tools.dominated_set(inst, ii, jj)) for ii in range(inst.m) for jj in range(inst.n))
        self.assertEqual(len(model_tools.build_ip_d(inst).rows_named('ddc_')), omega_total)
        form = model_tools.build_ip_a(inst)
        dominance = form.rows_named('adc_') + form.rows_named('path_')
        self.assertLessEqual(len(dominance), inst.m * inst.n + inst.m)

    def test_micqp_example(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        form = model_tools.build_micqp(inst, costs=0.)
        zdef = form.rows_named('zdef_1')[0]
        self.assertEqual([-coef for _, coef in zdef.coefs[1:]], [0.5, 0.5, 0.775])
        self.assertEqual(len(form.cones), 2)
        self.assertEqual(form.objective.sense, 'min')
        nothing = np.zeros(3)
        self.assertAlmostEqual(form.evaluate(nothing, np.zeros((2, 3))), 100., places=12)

    def test_micqp_blocks(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        self.assertEqual(len(model_tools.build_micqp(inst, dominance_block='DDC').rows_named('ddc_')), 4)
        self.assertEqual(len(model_tools.build_micqp(inst, dominance_block='ADC_PATH').rows_named('adc_')), 2)
        with self.assertRaises(ValueError):
            model_tools.build_micqp(inst, dominance_block='CUTS')

    def test_ip_d_lp_export(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        text = model_tools.export(model_tools.build_ip_d(inst, costs=0.), 'lp')
        lines = text.splitlines()
        self.assertIn(' ddc_1_3_1: y_1_3 + y_1_1 <= 1', lines)
        self.assertIn(' link_2_3: y_2_3 - x_3 <= 0', lines)
        self.assertEqual(sum(line.startswith(' link_') for line in lines), 6)
        self.assertEqual(sum(line.startswith(' ddc_') for line in lines), 4)
        self.assertIn('Binaries', lines)
        self.assertIn(' x_1 x_2 x_3 y_1_1 y_1_2 y_1_3 y_2_1 y_2_2 y_2_3', lines)
        self.assertEqual(lines[-1], 'End')
        self.assertTrue(lines[0].startswith('\\ lockerutils IP_D model, format version'))

    def test_micqp_lp_export_warns(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        with self.assertWarns(UserWarning):
            text = model_tools.export(model_tools.build_micqp(inst), 'LP_TEXT')
        self.assertIn('\\  cone_1: b_1 * z_1 >= 1', text.splitlines())
        self.assertIn(' 0 <= b_1 <= 1', text.splitlines())
        self.assertIn(' z_2 >= 1', text.splitlines())

    def test_lp_export_wraps_long_rows(self):
        import re
        inst = instance_tools.generate(instance_tools.GeneratorSpec(zone_count=3, locker_count=25,
                                                                    square_side=10., seed=5))
        with self.assertWarns(UserWarning):
            text = model_tools.export(model_tools.build_micqp(inst, costs=1.), 'lp')
        lines = text.splitlines()
        body = [line for line in lines if not line.startswith('\\')]
        for line in body:
            self.assertLessEqual(len(re.findall(r'\b[xyzb]_\d', line)), 10)
        # z_1 and 25 terms y_1_j over three lines
        start = lines.index([line for line in lines if line.startswith(' zdef_1: ')][0])
        row = lines[start:start + 3]
        self.assertTrue(all(line.startswith('   ') for line in row[1:]))
        self.assertTrue(row[-1].endswith(' = 1'))
        joined = ' '.join(part.strip() for part in row)
        self.assertEqual(len(re.findall(r'\by_1_\d+\b', joined)), 25)
        self.assertIn('y_1_25', joined)
        obj = lines.index('Minimize') + 1
        self.assertTrue(lines[obj].startswith(' obj: '))
        self.assertTrue(lines[obj + 1].startswith('   '))

    def test_conic_export(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        text = model_tools.export(model_tools.build_micqp(inst, dominance_block='ADC_PATH'), 'conic')
        lines = text.splitlines()
        self.assertEqual(sum(line.startswith('RQUAD ') for line in lines), inst.m)
        self.assertIn('CONES 2', lines)
        self.assertIn('RQUAD cone_1 b_1 z_1 1', lines)
        self.assertEqual(lines[-1], 'END')

    def test_unknown_format(self):
        inst = instance_tools.choice_overload_example()
        with self.assertRaises(ValueError):
            model_tools.export(model_tools.build_ip_d(inst), 'mps')

    def test_json_round_trip(self):
        inst = instance_tools.generate(instance_tools.GeneratorSpec(zone_count=4, locker_count=5,
                                                                    square_side=10., seed=3, gamma=1.))
        for form in (model_tools.build_ip_d(inst, 0.3, with_paths=True),
                     model_tools.build_ip_a(inst, 0.3, extra_paths=1),
                     model_tools.build_micqp(inst, 0.3, dominance_block='DDC')):
            again = model_tools.formulation_from_json(model_tools.export(form, 'json'))
            self.assertEqual(again, form)

    def test_json_parse_errors(self):
        with self.assertRaises(InstanceParseError):
            model_tools.formulation_from_json('{"format": "something else"}')
        with self.assertRaises(InstanceParseError):
            model_tools.formulation_from_json('{"format": ')

    def test_ddc_implies_adc(self):
        rng = np.random.default_rng(20240101)
        inst = one_zone([9., 7., 4., 3.5, 2., 0.9, 0.4], gamma=0.8)
        ddc = model_tools.build_ip_d(inst).rows_named('ddc_')
        adc = model_tools.build_ip_a(inst).rows_named('adc_')
        pairs = [(int(row.name.split('_')[2]) - 1, int(row.name.split('_')[3]) - 1) for row in ddc]
        for _ in range(10000):
            y = rng.uniform(size=inst.n)
            for jj, kk in pairs:
                if y[jj] + y[kk] > 1.:
                    y[kk] = 1. - y[jj]
            values = {'y_1_' + str(jj + 1): y[jj] for jj in range(inst.n)}
            self.assertTrue(all(row.satisfied(values, 1e-12) for row in ddc))
            self.assertTrue(all(row.satisfied(values, 1e-12) for row in adc))

    def test_adc_is_weaker_than_ddc(self):
        inst = one_zone([9., 2., 0.4], gamma=1.)
        values = {'y_1_1': 0.5, 'y_1_2': 1., 'y_1_3': 0.}
        adc = model_tools.build_ip_a(inst).rows_named('adc_')
        ddc = model_tools.build_ip_d(inst).rows_named('ddc_')
        self.assertTrue(all(row.satisfied(values) for row in adc))
        self.assertFalse(all(row.satisfied(values) for row in ddc))

    def test_objective_decomposition(self):
        inst = instance_tools.generate(instance_tools.GeneratorSpec(zone_count=6, locker_count=5,
                                                                    square_side=8., seed=17, gamma=0.5))
        cost = 3.
        ip = model_tools.build_ip_d(inst, cost)
        conic = model_tools.build_micqp(inst, cost)
        for counter in range(1 << inst.n):
            location = choice_tools.LocationDecision([(counter >> jj) & 1 for jj in range(inst.n)])
            restriction, res = solver_tools.evaluate_location(inst, location, cost)
            self.assertTrue(ip.is_feasible(location, restriction))
            self.assertTrue(conic.is_feasible(location, restriction))
            self.assertAlmostEqual(ip.evaluate(location, restriction), res.profit, delta=1e-9)
            self.assertAlmostEqual(res.profit + conic.evaluate(location, restriction) - inst.total_demand,
                                   0., delta=1e-9)

    def test_infeasible_restriction_detected(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        x = np.ones(3)
        y = np.ones((2, 3))
        self.assertFalse(model_tools.build_ip_d(inst).is_feasible(x, y))
        self.assertFalse(model_tools.build_micqp(inst).is_feasible(x, y))
        self.assertFalse(model_tools.build_ip_a(inst).is_feasible(np.zeros(3), np.eye(2, 3)))

    @settings(max_examples=100, derandomize=True, deadline=None)
    @given(st.integers(1, 5), st.integers(1, 6), st.integers(0, 2 ** 32),
           st.sampled_from([0., 0.5, 1., 2., 5., math.inf]), st.sampled_from([0., 0.01, 0.2]))
    def test_conic_optimum_matches_profit(self, m, n, seed, gamma, level):
        # brute force over integer points of the conic model, zone by zone
        inst = instance_tools.generate(instance_tools.GeneratorSpec(zone_count=m, locker_count=n,
                                                                    square_side=5., seed=seed, gamma=gamma))
        cost = level * inst.total_demand / n
        conic = model_tools.build_micqp(inst, cost, dominance_block='DDC')
        best = math.inf
        for location in itertools.product([0, 1], repeat=n):
            open_set = [jj for jj in range(n) if location[jj]]
            y = np.zeros((m, n))
            for ii in range(m):
                best_zone = None
                for size in range(len(open_set) + 1):
                    for subset in itertools.combinations(open_set, size):
                        if choice_tools.antichain_violation(inst, ii, subset) is not None:
                            continue
                        lost = 1. / (1. + sum(inst.attraction[ii, jj] for jj in subset) / inst.outside_attraction[ii])
                        if best_zone is None or lost < best_zone[0]:
                            best_zone = (lost, subset)
                y[ii, list(best_zone[1])] = 1.
            best = min(best, conic.evaluate(np.array(location), y))
        optimum = solver_tools.solve_bruteforce(inst, cost).profit
        self.assertAlmostEqual(inst.total_demand - best, optimum, delta=1e-6)


if __name__ == '__main__':
    unittest.main()

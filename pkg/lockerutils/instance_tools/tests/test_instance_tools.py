#info to run only one test
#python -m unittest lockerutils.instance_tools.tests.test_instance_tools.TestStringMethods.test_round_trip

import json
import math
import os
import tempfile
import unittest
import numpy as np
from hypothesis import given, settings, strategies as st

import lockerutils.instance_tools as instance_tools
from lockerutils.instance_tools.xoshiro import splitmix64
from lockerutils.errors import InstanceParseError, ValidationError


def small_spec(seed=7, gamma=math.inf, **kwargs):
    return instance_tools.GeneratorSpec(zone_count=6, locker_count=4, square_side=30., seed=seed, gamma=gamma, **kwargs)


class TestStringMethods(unittest.TestCase):

    def test_splitmix64_reference_values(self):
        state, first = splitmix64(0)
        _, second = splitmix64(state)
        self.assertEqual(first, 0xe220a8397b1dcdaf)
        self.assertEqual(second, 0x6e789e6aa1b965f4)

    def test_xoshiro_stream(self):
        rng_a = instance_tools.Xoshiro256(42)
        rng_b = instance_tools.Xoshiro256(42)
        rng_c = instance_tools.Xoshiro256(43)
        draws_a = [rng_a.next_u64() for _ in range(10)]
        self.assertEqual(draws_a, [rng_b.next_u64() for _ in range(10)])
        self.assertNotEqual(draws_a, [rng_c.next_u64() for _ in range(10)])
        self.assertTrue(all(0 <= val < 2**64 for val in draws_a))
        values = [rng_a.uniform(1., 1000.) for _ in range(1000)]
        self.assertTrue(all(1. <= val <= 1000. for val in values))

    def test_xoshiro_seed_range(self):
        instance_tools.Xoshiro256(2**64 - 1)
        with self.assertRaises(ValueError):
            instance_tools.Xoshiro256(-1)
        with self.assertRaises(ValueError):
            instance_tools.Xoshiro256(2**64)

    def test_attraction_from_distance(self):
        self.assertAlmostEqual(instance_tools.attraction_from_distance(1., 1.), 0.367879, places=6)
        self.assertEqual(instance_tools.attraction_from_distance(0., 5.), 1.)
        self.assertAlmostEqual(instance_tools.attraction_from_distance(2., 0.5), math.exp(-1.), places=15)
        # far away lockers keep a positive attraction
        self.assertGreater(instance_tools.attraction_from_distance(1e6, 10.), 0.)
        with self.assertRaises(ValidationError):
            instance_tools.attraction_from_distance(-1., 1.)
        with self.assertRaises(ValidationError):
            instance_tools.attraction_from_distance(1., -1.)

    def test_outside_attraction(self):
        self.assertAlmostEqual(instance_tools.outside_attraction(1.), 0.367879441171, places=12)
        self.assertAlmostEqual(instance_tools.outside_attraction(math.e), 1., places=15)
        self.assertAlmostEqual(instance_tools.outside_attraction(0.5), 0.183939720586, places=12)
        for xi in (0., -1., math.inf):
            with self.assertRaises(ValidationError):
                instance_tools.outside_attraction(xi)

    def test_attraction_matrix(self):
        zone_xy = [[0., 0.], [3., 4.]]
        locker_xy = [[0., 0.], [0., 4.], [3., 0.]]
        expected = np.exp(-np.array([[0., 4., 3.], [5., 3., 4.]]))
        np.testing.assert_allclose(instance_tools.attraction_matrix(zone_xy, locker_xy, 1.), expected, rtol=1e-15)

    def test_instance_validation(self):
        zones = [instance_tools.Zone(0, 1.)]
        lockers = [instance_tools.Locker(0), instance_tools.Locker(1)]
        with self.assertRaises(ValidationError):
            instance_tools.Instance(zones, lockers, [[1., 0.]], [1.], 1.)
        with self.assertRaises(ValidationError):
            instance_tools.Instance(zones, lockers, [[1., 1.]], [0.], 1.)
        with self.assertRaises(ValidationError):
            instance_tools.Instance(zones, lockers, [[1., 1., 1.]], [1.], 1.)
        with self.assertRaises(ValidationError):
            instance_tools.Instance(zones, lockers, [[1., 1.]], [1.], -0.5)
        with self.assertRaises(ValidationError):
            instance_tools.Zone(0, 0.)
        with self.assertRaises(ValidationError):
            instance_tools.Locker(0, -1.)

    def test_instance_is_read_only(self):
        inst = instance_tools.choice_overload_example()
        with self.assertRaises(ValueError):
            inst.attraction[0, 0] = 5.
        self.assertEqual(inst.total_demand, 100.)
        self.assertIsNone(inst.zone_xy)

    def test_generator_spec_validation(self):
        with self.assertRaises(ValidationError):
            instance_tools.GeneratorSpec(zone_count=0, locker_count=1, square_side=1.)
        with self.assertRaises(ValidationError):
            instance_tools.GeneratorSpec(zone_count=1, locker_count=1, square_side=0.)
        with self.assertRaises(ValidationError):
            instance_tools.GeneratorSpec(zone_count=1, locker_count=1, square_side=1., demand_range=(5., 1.))
        with self.assertRaises(ValidationError):
            instance_tools.GeneratorSpec(zone_count=1, locker_count=1, square_side=1., xi=0.)
        with self.assertRaises(ValidationError):
            instance_tools.GeneratorSpec(zone_count=1, locker_count=1, square_side=1., seed=2**64)
        try:
            instance_tools.GeneratorSpec(zone_count=1, locker_count=1, square_side=1., alpha=-1.)
        except ValidationError as err:
            self.assertEqual(err.field, 'alpha')
        else:
            self.fail('negative alpha accepted')

    def test_ds1_shape(self):
        inst = instance_tools.generate(instance_tools.ds1_spec(seed=42))
        self.assertEqual((inst.m, inst.n), (200, 100))
        self.assertTrue(np.all(inst.attraction > 0.) and np.all(inst.attraction <= 1.))
        self.assertTrue(np.all((inst.demand >= 1.) & (inst.demand <= 1000.)))
        self.assertTrue(np.all((inst.zone_xy >= 0.) & (inst.zone_xy <= 30.)))
        self.assertEqual(inst.meta['demand_kind'], 'continuous')
        self.assertEqual(instance_tools.ds2_spec(seed=1).square_side, 40.)

    def test_zero_distance_limit(self):
        spec = instance_tools.GeneratorSpec(zone_count=1, locker_count=1, square_side=1e-4, seed=3)
        inst = instance_tools.generate(spec)
        self.assertAlmostEqual(inst.attraction[0, 0], 1., delta=1e-3)

    def test_generation_is_deterministic(self):
        first = instance_tools.dumps(instance_tools.generate(small_spec(seed=7)))
        second = instance_tools.dumps(instance_tools.generate(small_spec(seed=7)))
        self.assertEqual(first, second)
        self.assertNotEqual(first, instance_tools.dumps(instance_tools.generate(small_spec(seed=8))))

    def test_draw_order(self):
        inst = instance_tools.generate(small_spec(seed=11))
        rng = instance_tools.Xoshiro256(11)
        zone_xy = [(rng.uniform(0., 30.), rng.uniform(0., 30.)) for _ in range(6)]
        locker_xy = [(rng.uniform(0., 30.), rng.uniform(0., 30.)) for _ in range(4)]
        demand = [rng.uniform(1., 1000.) for _ in range(6)]
        np.testing.assert_array_equal(inst.zone_xy, zone_xy)
        np.testing.assert_array_equal(inst.locker_xy, locker_xy)
        np.testing.assert_array_equal(inst.demand, demand)

    @settings(max_examples=50, derandomize=True, deadline=None)
    @given(st.integers(0, 2**64 - 1), st.sampled_from([0., 0.5, 2., math.inf]))
    def test_round_trip(self, seed, gamma):
        inst = instance_tools.generate(small_spec(seed=seed, gamma=gamma)).with_costs(np.arange(4) * 0.1)
        again = instance_tools.loads(instance_tools.dumps(inst))
        self.assertEqual(again, inst)
        self.assertEqual(instance_tools.instance_hash(again), instance_tools.instance_hash(inst))

    def test_save_and_load(self):
        inst = instance_tools.choice_overload_example(gamma=math.inf, cost=0.25)
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = os.path.join(tmp_dir, 'example.json')
            instance_tools.save(inst, path)
            with open(path) as fid:
                doc = json.load(fid)
            again = instance_tools.load(path)
        self.assertEqual(doc['gamma'], 'inf')
        self.assertEqual(doc['format'], 'lockerutils-instance/1')
        self.assertNotIn('zone_xy', doc)
        self.assertEqual(again, inst)

    def test_load_rejects_zero_attraction(self):
        doc = json.loads(instance_tools.dumps(instance_tools.choice_overload_example()))
        doc['attraction'][0][1] = 0.
        with self.assertRaises(ValidationError) as ctx:
            instance_tools.loads(json.dumps(doc))
        self.assertIn('attraction must be positive', str(ctx.exception))

    def test_load_requires_gamma(self):
        doc = json.loads(instance_tools.dumps(instance_tools.choice_overload_example()))
        del doc['gamma']
        with self.assertRaises(InstanceParseError) as ctx:
            instance_tools.loads(json.dumps(doc))
        self.assertEqual(ctx.exception.field, 'gamma')

    def test_load_reports_position(self):
        with self.assertRaises(InstanceParseError) as ctx:
            instance_tools.loads('{\n  "m": 2,\n  "n": oops\n}')
        self.assertEqual(ctx.exception.line, 3)
        with self.assertRaises(InstanceParseError) as ctx:
            instance_tools.loads('[1, 2]')
        with self.assertRaises(InstanceParseError) as ctx:
            doc = json.loads(instance_tools.dumps(instance_tools.choice_overload_example()))
            doc['demand'] = [1.]
            instance_tools.loads(json.dumps(doc))
        self.assertEqual(ctx.exception.field, 'demand')

    def test_with_gamma_and_costs(self):
        inst = instance_tools.choice_overload_example(gamma=0.5)
        self.assertEqual(inst.with_gamma(math.inf).gamma, math.inf)
        self.assertEqual(inst.gamma, 0.5)
        np.testing.assert_array_equal(inst.with_costs(2.).cost, [2., 2., 2.])
        np.testing.assert_array_equal(inst.with_costs([0., 1., 2.]).cost, [0., 1., 2.])
        with self.assertRaises(ValidationError):
            inst.with_costs([1., 2.])
        self.assertNotEqual(instance_tools.instance_hash(inst), instance_tools.instance_hash(inst.with_gamma(1.)))

    def test_with_alpha(self):
        inst = instance_tools.generate(small_spec(seed=5, alpha=1.))
        self.assertEqual(inst.with_alpha(1.), inst)
        steeper = inst.with_alpha(2.)
        np.testing.assert_allclose(steeper.attraction, inst.attraction ** 2, rtol=1e-12)
        self.assertEqual(steeper.meta['alpha'], 2.)
        with self.assertRaises(ValidationError):
            instance_tools.choice_overload_example().with_alpha(1.)

    def test_with_xi(self):
        inst = instance_tools.generate(small_spec(seed=5))
        other = inst.with_xi(0.5)
        np.testing.assert_array_equal(other.outside_attraction, np.full(6, 0.5 * math.exp(-1.)))
        np.testing.assert_array_equal(other.attraction, inst.attraction)
        self.assertEqual(other.meta['xi'], 0.5)

    def test_choice_overload_example(self):
        inst = instance_tools.choice_overload_example(with_third_locker=False)
        self.assertEqual((inst.m, inst.n), (2, 2))
        np.testing.assert_array_equal(inst.outside_attraction, [4., 4.])


if __name__ == '__main__':
    unittest.main()

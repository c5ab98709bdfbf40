import logging
import numpy as np

from .generator_spec import GeneratorSpec


def generate(spec: GeneratorSpec):
    """ Build a synthetic instance from a recipe

    Random draws come from :class:`Xoshiro256` seeded with spec.seed and are taken
    in a fixed order:

        - zone positions, x then y, zone 0 to m-1
        - locker positions, x then y, locker 0 to n-1
        - zone demands, zone 0 to m-1

    so that the same spec always gives the same instance, bit for bit.
    Facility costs are left at zero; they are supplied when solving.

    Args:
        spec:  a :class:`GeneratorSpec`

    Returns:
        An :class:`Instance` whose attraction matrix is e^{-alpha L_ij} with L_ij
        the Euclidean distance, and whose outside attraction is xi e^-1.

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> spec = instance_tools.GeneratorSpec(zone_count=3, locker_count=2, square_side=30., seed=42)
        >>> inst = instance_tools.generate(spec)
        >>> inst.m, inst.n
        (3, 2)
        >>> bool((inst.attraction > 0).all() and (inst.attraction <= 1).all())
        True
    """

    from .xoshiro import Xoshiro256
    from .attraction import attraction_matrix, outside_attraction
    from .instance import Instance, Zone, Locker

    logger = logging.getLogger(__name__)

    rng = Xoshiro256(spec.seed)
    side = spec.square_side
    zone_xy = [(rng.uniform(0., side), rng.uniform(0., side)) for _ in range(spec.zone_count)]
    locker_xy = [(rng.uniform(0., side), rng.uniform(0., side)) for _ in range(spec.locker_count)]
    lo, hi = spec.demand_range
    demand = [rng.uniform(lo, hi) for _ in range(spec.zone_count)]

    attraction = attraction_matrix(np.array(zone_xy), np.array(locker_xy), spec.alpha)
    outside = np.full(spec.zone_count, outside_attraction(spec.xi))

    meta = {'generator':    'uniform_square',
            'prng':         'xoshiro256**/splitmix64',
            'seed':         spec.seed,
            'square_side':  float(side),
            'demand_range': [lo, hi],
            'demand_kind':  'continuous',
            'alpha':        float(spec.alpha),
            'xi':           float(spec.xi)}

    logger.info('generated instance with ' + str(spec.zone_count) + ' zones and '
                + str(spec.locker_count) + ' lockers, seed=' + str(spec.seed))

    return Instance(zones=[Zone(ii, demand[ii], zone_xy[ii]) for ii in range(spec.zone_count)],
                    lockers=[Locker(jj, 0., locker_xy[jj]) for jj in range(spec.locker_count)],
                    attraction=attraction,
                    outside_attraction=outside,
                    gamma=spec.gamma,
                    meta=meta)

def choice_overload_example(gamma=0.5, with_third_locker=True, cost=0.):
    """ The small instance showing how opening an attractive locker can reduce revenue

    Two zones with demand 50, lockers 1 and 2 with attraction 2 for both zones,
    locker 3 with attraction 3.1, and an outside option with attraction 4.
    With gamma=0.5, locker 3 dominates lockers 1 and 2 (3.1 > 1.5 x 2) so that
    letting customers see every open locker lowers the revenue from 50 to 43.7.

    Args:
        gamma:              dominance threshold
        with_third_locker:  set to False for the two locker version of the instance
        cost:               facility cost of every locker

    Returns:
        An :class:`Instance` with m=2 and n=3 (or n=2)

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> inst = instance_tools.choice_overload_example()
        >>> print(inst.attraction)
        [[2.  2.  3.1]
         [2.  2.  3.1]]
    """

    from .instance import Instance, Zone, Locker

    row = [2., 2., 3.1] if with_third_locker else [2., 2.]
    return Instance(zones=[Zone(0, 50.), Zone(1, 50.)],
                    lockers=[Locker(jj, cost) for jj in range(len(row))],
                    attraction=[row, row],
                    outside_attraction=[4., 4.],
                    gamma=gamma,
                    meta={'generator': 'choice_overload_example'})

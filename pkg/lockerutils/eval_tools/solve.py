BB = 'bb'
BRUTEFORCE = 'bruteforce'
METHODS = (BB, BRUTEFORCE)


def solve(instance, costs=None, config=None, method=BB):
    """ Optimal solution with the chosen solver

    Args:
        instance:  an :class:`Instance`
        costs:     facility costs, scalar or length n, defaults to the instance costs
        config:    a :class:`SolveConfig` for the branch and bound
        method:    'bb' or 'bruteforce'

    Returns:
        A :class:`SolveResult`
    """
    from .. import solver_tools
    if method == BB:
        return solver_tools.solve_bb(instance, costs, config)
    if method == BRUTEFORCE:
        return solver_tools.solve_bruteforce(instance, costs)
    raise ValueError('unknown method ' + repr(method) + ', expected one of ' + ', '.join(METHODS))

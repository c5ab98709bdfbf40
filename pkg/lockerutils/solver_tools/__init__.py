from .solver_types        import SolveConfig, SolveResult, NodeState, relative_gap
from .solver_types        import MAX_DEMAND_WEIGHTED_ATTRACTION, LOWEST_INDEX, GREEDY_LOCAL_SEARCH, NO_HEURISTIC
from .solver_types        import OPTIMAL, GAP_LIMIT, TIME_LIMIT, NODE_LIMIT
from .best_restriction    import best_restriction, window_sums
from .evaluate_location   import evaluate_location
from .node_bound          import node_bound
from .greedy_local_search import greedy_local_search
from .solve_bb            import solve_bb
from .solve_bruteforce    import solve_bruteforce, MAX_LOCKERS

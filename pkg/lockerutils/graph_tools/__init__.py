from .dominance_graph     import DominanceGraph, build
from .topological_order   import topological_order
from .longest_path        import PathInequality, longest_path, implied_pair_count
from .disjoint_long_paths import disjoint_long_paths
from .to_dot              import to_dot

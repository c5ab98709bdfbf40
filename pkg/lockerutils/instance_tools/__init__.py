from .instance        import Instance, Zone, Locker
from .generator_spec  import GeneratorSpec, ds1_spec, ds2_spec
from .attraction      import attraction_from_distance
from .attraction      import outside_attraction
from .attraction      import attraction_matrix
from .generate        import generate
from .instance_io     import save, load, dumps, loads, instance_hash
from .xoshiro         import Xoshiro256
from .choice_overload import choice_overload_example

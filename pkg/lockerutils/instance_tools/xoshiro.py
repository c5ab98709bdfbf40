"""
The pseudo random number generator used to build synthetic instances.

Instances must be identical whatever the platform or language used to
generate them, so the generator is pinned algorithmically rather than
borrowed from numpy.random whose streams may change between versions.

Seeding uses splitmix64::

    state = state + 0x9E3779B97F4A7C15            (mod 2^64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9      (mod 2^64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB      (mod 2^64)
    output z ^ (z >> 31)

Four successive splitmix64 outputs form the state (s0, s1, s2, s3) of a
xoshiro256** stream::

    result = rotl(s1 * 5, 7) * 9                  (mod 2^64)
    t  = s1 << 17                                 (mod 2^64)
    s2 = s2 ^ s0
    s3 = s3 ^ s1
    s1 = s1 ^ s2
    s0 = s0 ^ s3
    s2 = s2 ^ t
    s3 = rotl(s3, 45)

A uniform double in [0,1) is (result >> 11) * 2^-53.
"""

_MASK = 0xFFFFFFFFFFFFFFFF


def _rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & _MASK


def splitmix64(state):
    """ One step of splitmix64

    Args:
        state:  64-bit unsigned integer

    Returns:
        (new_state, output)

    Example:

        >>> from lockerutils.instance_tools.xoshiro import splitmix64
        >>> state, out = splitmix64(0)
        >>> hex(out)
        '0xe220a8397b1dcdaf'
    """
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, z ^ (z >> 31)


class Xoshiro256():
    """ xoshiro256** stream seeded with splitmix64

    Args:
        seed:  64-bit unsigned integer

    Example:

        >>> from lockerutils.instance_tools.xoshiro import Xoshiro256
        >>> rng_a = Xoshiro256(7)
        >>> rng_b = Xoshiro256(7)
        >>> [rng_a.next_u64() for _ in range(3)] == [rng_b.next_u64() for _ in range(3)]
        True
        >>> 0. <= rng_a.uniform() < 1.
        True
    """

    def __init__(self, seed):
        if not isinstance(seed, int) or seed < 0 or seed > _MASK:
            raise ValueError('seed must be an integer in [0, 2^64)')
        sm_state = seed
        state = []
        for _ in range(4):
            sm_state, out = splitmix64(sm_state)
            state.append(out)
        self._s = state

    def next_u64(self):
        s0, s1, s2, s3 = self._s
        result = (_rotl((s1 * 5) & _MASK, 7) * 9) & _MASK
        t = (s1 << 17) & _MASK
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s = [s0, s1, s2, s3]
        return result

    def uniform(self, low=0., high=1.):
        """ Uniform double in [low, high) """
        unit = (self.next_u64() >> 11) * (1.0 / 9007199254740992.0)
        return low + (high - low) * unit

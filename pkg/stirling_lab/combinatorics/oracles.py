"""
Exhaustive enumeration oracles
Set partitions are enumerated as restricted-growth strings, permutations
through itertools; both are bounded so a full sweep stays at desk scale.
"""
import itertools

from combinatorics.exceptions import IndexRangeError, PreconditionError

SET_PARTITION_BOUND = 12
PERMUTATION_BOUND = 8


def restricted_growth_strings(n, blocks):
    """
    Yield every restricted-growth string a_0..a_{n-1} with exactly `blocks`
    distinct values: a_0 = 0 and a_i <= 1 + max(a_0..a_{i-1}).
    """
    if n == 0:
        if blocks == 0:
            yield ()
        return
    if blocks < 1 or blocks > n:
        return

    word = [0] * n

    def fill(position, opened):
        if position == n:
            if opened == blocks:
                yield tuple(word)
            return
        # positions left must still be able to open the missing blocks
        remaining = n - position
        for value in range(min(opened + 1, blocks)):
            if blocks - opened > remaining - 1 and value < opened:
                continue
            word[position] = value
            yield from fill(position + 1, max(opened, value + 1))

    yield from fill(1, 1)


def s2_oracle(n, k):
    """Number of partitions of an n-set into k nonempty blocks, by enumeration"""
    if not 0 <= k <= n:
        raise PreconditionError(f"need 0 <= k <= n, got n={n}, k={k}")
    if n > SET_PARTITION_BOUND:
        raise IndexRangeError(f"set-partition enumeration is bounded by n <= {SET_PARTITION_BOUND}")
    return sum(1 for _ in restricted_growth_strings(n, k))


def cycle_count(permutation):
    seen = [False] * len(permutation)
    cycles = 0
    for start in range(len(permutation)):
        if seen[start]:
            continue
        cycles += 1
        position = start
        while not seen[position]:
            seen[position] = True
            position = permutation[position]
    return cycles


def s1_oracle(n, k):
    """Signed first-kind value (-1)^{n-k} * #{permutations of n elements with k cycles}"""
    if not 0 <= k <= n:
        raise PreconditionError(f"need 0 <= k <= n, got n={n}, k={k}")
    if n > PERMUTATION_BOUND:
        raise IndexRangeError(f"permutation enumeration is bounded by n <= {PERMUTATION_BOUND}")
    count = sum(1 for permutation in itertools.permutations(range(n)) if cycle_count(permutation) == k)
    return -count if (n - k) % 2 else count

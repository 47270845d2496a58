from typing import Iterator, Sequence, Tuple, TypeVar

T = TypeVar("T")


def colex_combinations(items: Sequence[T], r: int) -> Iterator[Tuple[T, ...]]:
    """
    All r-subsets of a sequence in colexicographic order: ordered by their largest element first, then by the next
    largest, and so on. Over range(n) this is the order of the subsets' bitmasks as integers.
    @param items: The ground sequence; positions define the order
    @param r: The subset size
    @return: An iterator of r-tuples, each tuple listing its elements in increasing position
    """
    if r == 0:
        yield ()
        return

    for last in range(r - 1, len(items)):
        for prefix in colex_combinations(items[:last], r - 1):
            yield prefix + (items[last],)


def members(mask: int) -> Tuple[int, ...]:
    """
    The vertices of a bitmask, increasing.
    """
    found = []
    while mask:
        low = mask & -mask
        found.append(low.bit_length() - 1)
        mask ^= low
    return tuple(found)


def splitmix64(x: int) -> int:
    """
    One step of the splitmix64 output function; a well-mixed 64-bit value derived from x.
    @param x: Any integer, reduced modulo 2^64
    @return: An integer in [0, 2^64)
    """
    z = (x + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return z ^ (z >> 31)


def colex_masks(n: int, r: int) -> Iterator[int]:
    """
    Every r-subset of range(n) as a bitmask, increasing; the same order as colex_combinations(range(n), r).
    Successive masks come from Gosper's hack.
    """
    if r == 0:
        yield 0
        return
    if r > n:
        return

    mask = (1 << r) - 1
    while mask < 1 << n:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple

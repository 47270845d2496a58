from ..util.helpers import splitmix64

GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MASK_64 = 0xFFFFFFFFFFFFFFFF


def graph_seed(master: int, index: int) -> int:
    """
    The seed of the index-th graph of an ensemble: splitmix64(master + index * GOLDEN_GAMMA mod 2^64). Each graph's
    seed depends only on the master seed and its own index, so graphs can be generated in any order, by any worker.
    @param master: The ensemble's master seed, a u64
    @param index: The graph's position in the ensemble, from 0
    @return: A u64 seed
    """
    return splitmix64((master + index * GOLDEN_GAMMA) & MASK_64)


def sub_seed(seed: int, stream: int) -> int:
    """
    An independent seed for one of several draws made for the same graph (order, probability, edges, ...).
    """
    return splitmix64((seed + (stream + 1) * GOLDEN_GAMMA) & MASK_64)

import pytest

from mumsep import enableDebugLog
from mumsep.errors import ConfigurationError, UnsupportedPartitionError
from mumsep.partition import PartitionSpec, blockDims, isAdjacent, parsePartition

enableDebugLog()


def test_parse():
    assert(parsePartition('0,1|2') == [[0, 1], [2]])
    assert(parsePartition(' 2 | 0,1 ') == [[2], [0, 1]])
    with pytest.raises(ConfigurationError):
        parsePartition('0||1')
    with pytest.raises(ConfigurationError):
        parsePartition('0,a|1')


def test_block_dims():
    assert(blockDims([2, 3, 4], [[0, 1], [2]]) == [6, 4])
    assert(isAdjacent([[0, 1], [2, 3]]))
    assert(not isAdjacent([[0, 2], [1, 3]]))


def test_spec():
    spec = PartitionSpec([[0, 1], [2]], (2, 2, 3))
    assert(spec.groups == [[0, 1], [2]])
    assert(spec.k == 2)
    assert(spec.blockDims == [4, 3])
    assert(spec.adjacent)
    assert(spec.shorty == '0,1|2')
    spec.requireAdjacent()

    scattered = PartitionSpec([[0, 2], [1]], (2, 2, 2))
    assert(not scattered.adjacent)
    with pytest.raises(UnsupportedPartitionError):
        scattered.requireAdjacent()

    reversed_blocks = PartitionSpec([[2], [0, 1]], (2, 2, 3))
    assert(reversed_blocks.groups == [[2], [0, 1]])
    assert(reversed_blocks.blockDims == [3, 4])
    assert(not reversed_blocks.adjacent)
    with pytest.raises(UnsupportedPartitionError):
        reversed_blocks.requireAdjacent()
    assert(not PartitionSpec([[1, 0], [2]], (2, 2, 3)).adjacent)


def test_invalid_spec():
    with pytest.raises(ConfigurationError):
        PartitionSpec([[0, 1, 2]], (2, 2, 2))
    with pytest.raises(ConfigurationError):
        PartitionSpec([[0], [1]], (2, 2, 2))
    with pytest.raises(ConfigurationError):
        PartitionSpec([[0, 1], [1, 2]], (2, 2, 2))
    with pytest.raises(ConfigurationError):
        PartitionSpec([[0, 1], []], (2, 2))


if __name__ == '__main__':
    test_parse()
    test_block_dims()
    test_spec()
    test_invalid_spec()

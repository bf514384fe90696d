from mumsep.errors import ConfigurationError, UnsupportedPartitionError


def blockDims(dims, groups):
    """Dimension of each block: the product of its member party dims."""
    out = []
    for g in groups:
        size = 1
        for p in g:
            size *= dims[p]
        out.append(size)
    return out


def isAdjacent(groups):
    """True if the blocks are consecutive runs of parties in stored order."""
    expected = 0
    for g in groups:
        if list(g) != list(range(expected, expected + len(g))):
            return False
        expected += len(g)
    return True


def parsePartition(text: str):
    """Parse '0,1|2' into [[0, 1], [2]] (0-based party indices)."""
    groups = []
    for block in text.split('|'):
        block = block.strip()
        if not block:
            raise ConfigurationError("Empty block in partition '%s'" % text)
        try:
            groups.append([int(p) for p in block.split(',')])
        except ValueError:
            raise ConfigurationError("Invalid partition '%s'" % text)
    return groups


class PartitionSpec(object):
    """A partition of N parties into k >= 2 disjoint, nonempty blocks.

    Blocks and their members keep the order they are given in. Block i pairs
    with the i-th MUM set, so no reordering happens behind the caller.
    """
    def __init__(self, groups, dims):
        self.groups = [[int(p) for p in g] for g in groups]
        self.dims = tuple(int(x) for x in dims)
        self.validate()

    def validate(self):
        N = len(self.dims)
        members = [p for g in self.groups for p in g]
        if len(self.groups) < 2:
            raise ConfigurationError("Partition needs at least 2 blocks, got %d" % len(self.groups))
        if any(len(g) == 0 for g in self.groups):
            raise ConfigurationError("Partition blocks must be nonempty")
        if sorted(members) != list(range(N)):
            raise ConfigurationError("Partition %s does not split parties 0..%d exactly once"
                                     % (self.groups, N - 1))

    @property
    def k(self):
        return len(self.groups)

    @property
    def blockDims(self):
        return blockDims(self.dims, self.groups)

    @property
    def adjacent(self):
        return isAdjacent(self.groups)

    def requireAdjacent(self):
        if not self.adjacent:
            raise UnsupportedPartitionError("Blocks %s are not runs of adjacent parties; "
                                            "reorder the parties first" % self.groups)

    @property
    def shorty(self):
        return '|'.join(','.join(str(p) for p in g) for g in self.groups)

    def __str__(self):
        return '%s: dims %s -> blocks %s' % (self.shorty, list(self.dims), self.blockDims)

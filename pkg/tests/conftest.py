import pytest

from oddlength.groups import IndexSet


@pytest.fixture
def all_sets():
    """Every index set of a given kind and rank."""
    def make(kind, n):
        bits = IndexSet.full(kind, n).mask.bit_length()
        return [IndexSet.from_mask(kind, n, m) for m in range(1 << bits)]
    return make

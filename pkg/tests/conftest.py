import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from annigraph import cyclic_ring, null_square_local_ring, poly_quotient_ring, product_ring
from annigraph.corpus import CorpusConfig, generate_corpus


@pytest.fixture(scope="session")
def z16():
    return cyclic_ring(16)


@pytest.fixture(scope="session")
def z2z4():
    return product_ring(cyclic_ring(2), cyclic_ring(4))


@pytest.fixture(scope="session")
def z2_dual():
    return product_ring(cyclic_ring(2), poly_quotient_ring(2, [0, 0, 1]))


@pytest.fixture(scope="session")
def gf4():
    return poly_quotient_ring(2, [1, 1, 1])


@pytest.fixture(scope="session")
def n22():
    return null_square_local_ring(2, 2)


@pytest.fixture(scope="session")
def corpus16():
    return generate_corpus(CorpusConfig(16))


@pytest.fixture(scope="session")
def corpus32():
    return generate_corpus(CorpusConfig(32))

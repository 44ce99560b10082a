import pytest

from annigraph.corpus import FAMILIES, CorpusConfig, corpus_specs, generate_corpus
from annigraph.errors import InvalidOrder
from annigraph.spec import render, spec_order


def labels(cfg):
    return [r.label for r in generate_corpus(cfg)]


def test_cyclic_only_up_to_8():
    assert labels(CorpusConfig(8, frozenset({"cyclic"}))) == [f"Z{n}" for n in range(2, 9)]


def test_all_families_up_to_8():
    got = labels(CorpusConfig(8))
    assert "Z2 x Z4" in got and "Z2[x]/(x^3)" in got
    assert "N(2,2)" in got and "Z2 x Z2 x Z2" in got


def test_max_order_two():
    assert labels(CorpusConfig(2)) == ["Z2"]


def test_config_validation():
    with pytest.raises(InvalidOrder):
        CorpusConfig(1)
    with pytest.raises(ValueError):
        CorpusConfig(8, frozenset({"matrices"}))


def test_poly_degree_cap():
    got = labels(CorpusConfig(16, frozenset({"polyquot"}), max_poly_degree=2))
    assert got and all("^3" not in lab and "^4" not in lab for lab in got)
    assert len(labels(CorpusConfig(16, frozenset({"polyquot"})))) > len(got)


def test_counts_and_orders(corpus16, corpus32):
    assert len(corpus16) == 115
    assert len(corpus32) == 408
    assert all(r.order <= 32 for r in corpus32)


@pytest.mark.parametrize("m", [2, 5, 8, 12, 16])
def test_canonical_order_and_unique_labels(m):
    specs = corpus_specs(CorpusConfig(m))
    keys = [(spec_order(s), render(s)) for s in specs]
    assert keys == sorted(keys)
    assert len({k[1] for k in keys}) == len(keys)


@pytest.mark.parametrize("m, m2", [(2, 8), (8, 16), (12, 16), (16, 32)])
def test_monotone_prefix(m, m2):
    small = [(spec_order(s), render(s)) for s in corpus_specs(CorpusConfig(m))]
    big = [(spec_order(s), render(s)) for s in corpus_specs(CorpusConfig(m2))]
    assert big[: len(small)] == small
    assert all(k[0] > m for k in big[len(small):])


def test_deterministic():
    assert labels(CorpusConfig(16)) == labels(CorpusConfig(16))


def test_families_subset():
    only_null = labels(CorpusConfig(27, frozenset({"nullsquare"})))
    assert only_null == ["N(2,1)", "N(2,2)", "N(3,1)", "N(2,3)", "N(5,1)", "N(3,2)"]
    assert FAMILIES == {"cyclic", "polyquot", "nullsquare", "products"}


def test_products_pair_is_unordered():
    got = labels(CorpusConfig(6, frozenset({"cyclic", "products"})))
    assert "Z2 x Z3" in got and "Z3 x Z2" not in got

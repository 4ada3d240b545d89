import pytest

from agbench.classmap import (
    CATEGORY_NAMES_16,
    ClassMap,
    ClassMapFormatError,
    load_class_map,
)


def test_sixteen_canonical_names():
    assert len(CATEGORY_NAMES_16) == 16
    assert len(set(CATEGORY_NAMES_16)) == 16


def test_empty_table_all_unmapped():
    cmap = load_class_map("fine_index,category\n")
    assert all(cmap.lookup(i) is None for i in range(0, 1000, 97))


def test_single_row():
    cmap = load_class_map("fine_index,category\n207,dog\n")
    assert cmap.lookup(207) == CATEGORY_NAMES_16.index("dog")
    assert cmap.lookup(208) is None


def test_headerless_table_accepted():
    cmap = load_class_map("207,dog\n5,cat\n")
    assert cmap.lookup(5) == CATEGORY_NAMES_16.index("cat")


def test_duplicate_fine_index_rejected():
    with pytest.raises(ClassMapFormatError, match="duplicate"):
        load_class_map("207,dog\n207,cat\n")


def test_unknown_category_rejected():
    with pytest.raises(ClassMapFormatError, match="unknown category"):
        load_class_map("207,zebra\n")


def test_out_of_range_fine_index_rejected():
    with pytest.raises(ClassMapFormatError, match="out of range"):
        load_class_map("1000,dog\n")


def test_coarse_indices_always_below_16():
    rows = "\n".join(f"{i},{CATEGORY_NAMES_16[i % 16]}" for i in range(100))
    cmap = load_class_map(rows)
    assert all(0 <= v < 16 for v in cmap.entries.values())


def test_constructor_validates_entries():
    with pytest.raises(ValueError):
        ClassMap(entries={5: 16})
    with pytest.raises(ValueError):
        ClassMap(entries={-1: 3})
    with pytest.raises(ValueError):
        ClassMap(entries={}, category_names=["a"] * 15)

from math import comb

import pytest

from symkernel.codec import decode_sympoly
from symkernel.db.goldens import GoldenStore
from symkernel.errors import CodecError, ConfigError
from symkernel.suite import basis_counts, elementary_table, emit_goldens, wk_table


def test_save_and_load(tmp_path):

    store = GoldenStore(tmp_path)
    path = store.save("table", {"b": [1, 2], "a": "x"})

    assert path.name == "table-0.json"
    assert path.read_text() == '{"a":"x","b":[1,2]}\n'
    assert store.load("table") == {"a": "x", "b": [1, 2]}
    assert store.names() == ["table"]


def test_unchanged_save_is_dropped(tmp_path):

    store = GoldenStore(tmp_path)
    first = store.save("table", {"a": 1})
    again = store.save("table", {"a": 1})

    assert again == first
    assert len(store.history("table")) == 1
    assert not (tmp_path / "table-1.json").exists()


def test_changed_save_adds_a_revision(tmp_path):

    store = GoldenStore(tmp_path)
    store.save("table", {"a": 1})
    path = store.save("table", {"a": 2})

    assert path.name == "table-1.json"
    assert len(store.history("table")) == 2
    assert store.verify("table", {"a": 2})
    assert not store.verify("table", {"a": 1})


def test_missing_golden(tmp_path):

    store = GoldenStore(tmp_path)

    assert store.path("nothing") is None
    assert not store.verify("nothing", {})
    with pytest.raises(CodecError):
        store.load("nothing")


def test_clear(tmp_path):

    store = GoldenStore(tmp_path)
    store.save("one", [1])
    store.save("two", [2])
    store.clear("one")

    assert store.names() == ["two"]
    store.clear()
    assert store.names() == []


def test_wk_table():

    table = wk_table(1, 1)
    w = [decode_sympoly(data) for data in table["wk"]]

    assert (table["m"], table["n"]) == (1, 1)
    assert len(w) == 2
    assert w[0].expr.is_one()


def test_elementary_table_rows():

    table = elementary_table(2, 2)

    assert table["n"] == 2
    assert len(table["rows"]) == 3
    assert all(row["tensor"]["basis"] == "orbit_sums" for row in table["rows"])


def test_basis_counts():

    counts = basis_counts()["counts"]

    assert {"r": 3, "n": 4, "count": comb(6, 2)} in counts
    assert all(c["count"] == comb(c["n"] + c["r"] - 1, c["r"] - 1) for c in counts)


def test_emit_is_idempotent(tmp_path):

    store = GoldenStore(tmp_path)
    first = emit_goldens(store, ["basis_counts", "elementary"])
    second = emit_goldens(store, ["basis_counts", "elementary"])

    assert first == second
    assert "elementary_3_3" in first
    assert all(len(store.history(name)) == 1 for name in first)


def test_emit_unknown_table(tmp_path):

    with pytest.raises(ConfigError):
        emit_goldens(GoldenStore(tmp_path), ["nope"])

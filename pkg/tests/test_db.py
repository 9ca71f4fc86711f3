import pytest

from morphlex import (
    ComboOverflowError,
    ComboTable,
    CorruptDatabaseError,
    Database,
    DatabaseError,
    Parse,
    compile_db,
    decode_entry,
    dump_flat,
    encode_entry,
    load_sample_lexicon,
    parse_lexicon,
    restore_flat,
    write_db,
)

FIGURE3_LEXICON = """\
saw N_Root2 "N(saw)"
saw V_Root8 "V(saw)"
saw V_Root1 "V(see) PAST STR"
"""

FIGURE3_FLAT = (
    "saw\tsaw N SG#saw V INF#see V PAST STR\n"
    "saw's\tsaw N SG GEN\n"
    "sawed\tsaw V PAST WK#saw V PPART WK\n"
    "sawing\tsaw V PROG\n"
    "saws\tsaw N PL#saw V 3SG PRES\n"
    "saws'\tsaw N PL GEN\n"
)


@pytest.fixture()
def fig3_db(tmp_path):
    path = tmp_path / "fig3.mdb"
    write_db(path, compile_db(parse_lexicon(FIGURE3_LEXICON)))
    with Database(path) as db:
        yield db


def test_encode_entry_prefix_contained_root_is_three_bytes():
    table = ComboTable(["N PL"])
    data = encode_entry("saws", "saw", table, "N PL")
    assert len(data) == 3
    assert data[0] == 3 and data[1] == 0


def test_encode_entry_divergent_root():
    table = ComboTable(["V PAST STR"])
    data = encode_entry("saw", "see", table, "V PAST STR")
    assert data[0] == 1
    assert data[1] == 2
    assert data[2:4] == b"ee"
    assert len(data) == 3 + 2


def test_encode_entry_identity_root():
    table = ComboTable(["N SG"])
    data = encode_entry("x", "x", table, "N SG")
    assert data[:2] == bytes((1, 0))


def test_decode_encode_identity():
    table = ComboTable(["N PL", "V PAST STR", "N"])
    for key, root, combo in [("saws", "saw", "N PL"), ("saw", "see", "V PAST STR"),
                             ("x", "x", "N")]:
        data = encode_entry(key, root, table, combo)
        parse = decode_entry(key, data, table)
        assert parse.root == root
        tokens = combo.split(" ")
        assert parse == Parse(tokens[0], root, tuple(tokens[1:]))


def test_combo_table_missing_combo():
    table = ComboTable(["N PL"])
    with pytest.raises(DatabaseError):
        encode_entry("saws", "saw", table, "V INF")


def test_compile_figure3_keys_and_flat(fig3_db):
    assert fig3_db.key_count == 6
    assert dump_flat(fig3_db) == FIGURE3_FLAT


def test_lookup(fig3_db):
    assert [p.render() for p in fig3_db.lookup("sawed")] == \
        ["V(saw) PAST WK", "V(saw) PPART WK"]
    assert [p.render() for p in fig3_db.lookup("saws")] == \
        ["N(saw) PL", "V(saw) 3SG PRES"]
    assert fig3_db.lookup("sawz") == []


def test_empty_lexicon_compiles(tmp_path):
    path = tmp_path / "empty.mdb"
    write_db(path, compile_db(parse_lexicon("")))
    with Database(path) as db:
        assert db.key_count == 0
        assert db.lookup("anything") == []
        assert dump_flat(db) == ""
        s = db.stats()
        assert (s.key_count, s.entry_count) == (0, 0)
        assert s.single_entry_fraction == 0.0
        assert s.mean_content_bytes == 0.0


def test_compile_is_deterministic_and_order_independent(tmp_path):
    lex = load_sample_lexicon()
    data1 = compile_db(lex)
    data2 = compile_db(lex)
    assert data1 == data2
    reordered = parse_lexicon(
        "\n".join(f'{e.lexical} {e.cls} "{e.parse.render()}"'
                  for e in reversed(lex.entries)))
    assert compile_db(reordered) == data1


def test_flat_round_trip_full_sample(tmp_path):
    data = compile_db(load_sample_lexicon())
    path = tmp_path / "sample.mdb"
    write_db(path, data)
    with Database(path) as db:
        flat = dump_flat(db)
    restored = restore_flat(flat)
    assert restored == data
    path2 = tmp_path / "restored.mdb"
    write_db(path2, restored)
    with Database(path2) as db2:
        assert dump_flat(db2) == flat


def test_restore_flat_reports_bad_lines():
    with pytest.raises(DatabaseError, match="line 1"):
        restore_flat("no tab here\n")
    with pytest.raises(DatabaseError, match="line 2"):
        restore_flat("saw\tsaw N SG\nsaws\tsaw QQ PL\n")


def test_stats_figure3(fig3_db):
    s = fig3_db.stats()
    assert s.key_count == 6
    assert s.entry_count == 10
    assert s.single_entry_fraction == pytest.approx(3 / 6)
    assert s.file_size > 0


def test_stats_match_flat_recount(tmp_path):
    path = tmp_path / "sample.mdb"
    write_db(path, compile_db(load_sample_lexicon()))
    with Database(path) as db:
        s = db.stats()
        flat = dump_flat(db)
    lines = flat.splitlines()
    assert s.key_count == len(lines)
    assert s.entry_count == sum(line.count("#") + 1 for line in lines)
    singles = sum("#" not in line for line in lines)
    assert s.single_entry_fraction == pytest.approx(singles / len(lines))


def test_key_count_not_above_expanded_form_count():
    lex = load_sample_lexicon()
    from morphlex import generate
    forms = [s for e in lex.entries for s, _ in generate(e)]
    assert len({*forms}) <= len(forms)
    data = compile_db(lex)
    import struct
    (key_count,) = struct.unpack_from("<Q", data, 12)
    assert key_count <= len(forms)


def test_corruption_distinguished_from_not_found(tmp_path):
    good = compile_db(parse_lexicon(FIGURE3_LEXICON))
    bad_magic = tmp_path / "bad_magic.mdb"
    bad_magic.write_bytes(b"XXXX" + good[4:])
    with pytest.raises(CorruptDatabaseError, match="magic"):
        Database(bad_magic)

    truncated = tmp_path / "truncated.mdb"
    truncated.write_bytes(good[:20])
    with pytest.raises(CorruptDatabaseError):
        Database(truncated)

    missing = tmp_path / "missing.mdb"
    with pytest.raises(DatabaseError):
        Database(missing)


def test_combo_overflow_reports_combos():
    from morphlex.core import ATTRIBUTES
    from itertools import combinations
    lines = []
    for i, pair in enumerate(combinations(ATTRIBUTES[:26], 2)):
        if i >= 257:
            break
        lines.append(f"k{i}\tr{i} N {pair[0]} {pair[1]}")
    with pytest.raises(ComboOverflowError) as exc:
        restore_flat("\n".join(lines) + "\n")
    assert len(exc.value.combos) == 257

import io

import pytest

from morphlex import sample_lexicon_path
from morphlex.cli import main

SAW_LEXICON = """\
saw N_Root2 "N(saw)"
saw V_Root8 "V(saw)"
saw V_Root1 "V(see) PAST STR"
"""

FIGURE3_LINES = [
    "saw\tsaw N SG#saw V INF#see V PAST STR",
    "saw's\tsaw N SG GEN",
    "sawed\tsaw V PAST WK#saw V PPART WK",
    "sawing\tsaw V PROG",
    "saws\tsaw N PL#saw V 3SG PRES",
    "saws'\tsaw N PL GEN",
]


@pytest.fixture()
def sample_lex(tmp_path):
    path = tmp_path / "sample.lex"
    path.write_text(sample_lexicon_path().read_text(encoding="utf-8"))
    return str(path)


@pytest.fixture()
def saw_lex(tmp_path):
    path = tmp_path / "saw.lex"
    path.write_text(SAW_LEXICON)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_recognize_lexicon_mode(capsys, sample_lex):
    code, out, _ = run(capsys, "recognize", "funkiest", "--lexicon", sample_lex)
    assert code == 0
    assert out == "funky+est\tA(funky) SUPER\n"


def test_recognize_none(capsys, sample_lex):
    code, out, _ = run(capsys, "recognize", "mouses'", "--lexicon", sample_lex)
    assert code == 0
    assert out == "*** NONE ***\n"


def test_recognize_db_mode(capsys, tmp_path, saw_lex):
    db = str(tmp_path / "saw.mdb")
    assert run(capsys, "compile", "--lexicon", saw_lex, "--out", db)[0] == 0
    code, out, _ = run(capsys, "recognize", "sawed", "--db", db)
    assert code == 0
    assert out == "saw V PAST WK\nsaw V PPART WK\n"


def test_fold_case(capsys, sample_lex):
    code, out, _ = run(capsys, "recognize", "FUNKY", "--lexicon", sample_lex)
    assert out == "*** NONE ***\n"
    code, out, _ = run(capsys, "recognize", "FUNKY", "--fold-case",
                       "--lexicon", sample_lex)
    assert out == "funky\tA(funky)\n"


def test_compile_then_dump_reproduces_figure3(capsys, tmp_path, saw_lex):
    db = str(tmp_path / "saw.mdb")
    run(capsys, "compile", "--lexicon", saw_lex, "--out", db)
    code, out, _ = run(capsys, "dump", "--db", db)
    assert code == 0
    assert out.splitlines() == FIGURE3_LINES


def test_restore_round_trip(capsys, tmp_path, saw_lex):
    db = tmp_path / "saw.mdb"
    flat = tmp_path / "saw.flat"
    restored = tmp_path / "restored.mdb"
    run(capsys, "compile", "--lexicon", saw_lex, "--out", str(db))
    run(capsys, "dump", "--db", str(db), "--out", str(flat))
    code, _, _ = run(capsys, "restore", "--flat", str(flat), "--out", str(restored))
    assert code == 0
    assert restored.read_bytes() == db.read_bytes()


def test_stats(capsys, tmp_path, saw_lex):
    db = str(tmp_path / "saw.mdb")
    run(capsys, "compile", "--lexicon", saw_lex, "--out", db)
    code, out, _ = run(capsys, "stats", "--db", db)
    assert code == 0
    assert "keys: 6" in out


def test_multiple_lexicons_merge(capsys, tmp_path):
    a = tmp_path / "a.lex"
    b = tmp_path / "b.lex"
    a.write_text('saw N_Root2 "N(saw)"\nsaw V_Root8 "V(saw)"\n')
    b.write_text('saw V_Root1 "V(see) PAST STR"\n')
    db = str(tmp_path / "merged.mdb")
    run(capsys, "compile", "--lexicon", str(a), "--lexicon", str(b), "--out", db)
    _, out, _ = run(capsys, "dump", "--db", db)
    assert out.splitlines() == FIGURE3_LINES


def test_lexicon_and_db_modes_agree(capsys, tmp_path, sample_lex):
    db = str(tmp_path / "sample.mdb")
    run(capsys, "compile", "--lexicon", sample_lex, "--out", db)
    for word in ("better", "saws", "taught", "qqq"):
        _, lex_out, _ = run(capsys, "recognize", word, "--lexicon", sample_lex)
        _, db_out, _ = run(capsys, "recognize", word, "--db", db)
        lex_parses = {line.split("\t")[1] for line in lex_out.splitlines()
                      if "\t" in line}
        db_parses = set()
        for line in db_out.splitlines():
            if line.startswith("***"):
                continue
            root, pos, *attrs = line.split(" ")
            rendered = f"{pos}({root})" + ("" if not attrs else " " + " ".join(attrs))
            db_parses.add(rendered)
        assert lex_parses == db_parses


def test_usage_error_exits_1(capsys, sample_lex):
    with pytest.raises(SystemExit) as exc:
        main(["recognize", "word"])  # no source
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["recognize", "word", "--lexicon", sample_lex, "--db", "x.mdb"])
    assert exc.value.code == 1


def test_missing_file_exits_2(capsys, tmp_path):
    assert main(["recognize", "word", "--lexicon", str(tmp_path / "nope.lex")]) == 2
    assert main(["stats", "--db", str(tmp_path / "nope.mdb")]) == 2


def test_corrupt_db_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.mdb"
    bad.write_bytes(b"not a database at all, definitely too short no wait")
    assert main(["stats", "--db", str(bad)]) == 2


def test_repl(capsys, monkeypatch, sample_lex):
    monkeypatch.setattr("sys.stdin", io.StringIO("funky\ngooder\n"))
    code = main(["repl", "--lexicon", sample_lex])
    assert code == 0
    out = capsys.readouterr().out
    assert "recognizer>>" in out
    assert "funky\tA(funky)" in out
    assert "*** NONE ***" in out


def test_generate(capsys, saw_lex):
    code, out, _ = run(capsys, "generate", "--lexicon", saw_lex)
    assert code == 0
    assert "saws'\tN(saw) PL GEN" in out.splitlines()

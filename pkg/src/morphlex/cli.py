"""Command-line front end: recognize, generate, compile, dump, restore,
stats, an interactive recognizer, and the maintenance HTTP service.

Exit codes: 0 success, 1 usage error, 2 I/O or corruption error.
"""
from __future__ import annotations

import argparse
import sys

from .analyzer import generate, recognize
from .core import MorphError
from .db import Database, compile_db, dump_flat, entry_text, restore_flat, write_db
from .lexicon import Lexicon, load_lexicon, merge_lexicons

NONE_LINE = "*** NONE ***"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _load_merged(paths) -> Lexicon:
    return merge_lexicons(load_lexicon(p) for p in paths)


def _print_lexicon_analyses(word: str, lex: Lexicon) -> None:
    analyses = recognize(word, lex)
    if not analyses:
        print(NONE_LINE)
        return
    for a in analyses:
        print(f"{a.lexical_form.render()}\t{a.parse.render()}")


def _print_db_analyses(word: str, db: Database) -> None:
    parses = db.lookup(word)
    if not parses:
        print(NONE_LINE)
        return
    for p in parses:
        print(entry_text(p))


def cmd_recognize(args) -> int:
    words = [w.lower() for w in args.words] if args.fold_case else args.words
    if args.lexicon:
        lex = _load_merged([args.lexicon])
        for word in words:
            _print_lexicon_analyses(word, lex)
    else:
        with Database(args.db) as db:
            for word in words:
                _print_db_analyses(word, db)
    return 0


def cmd_generate(args) -> int:
    lex = _load_merged(args.lexicon)
    for entry in lex.entries:
        for surface, parse in generate(entry):
            print(f"{surface}\t{parse.render()}")
    return 0


def cmd_compile(args) -> int:
    lex = _load_merged(args.lexicon)
    write_db(args.out, compile_db(lex))
    return 0


def cmd_dump(args) -> int:
    with Database(args.db) as db:
        text = dump_flat(db)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_restore(args) -> int:
    with open(args.flat, encoding="utf-8") as f:
        text = f.read()
    write_db(args.out, restore_flat(text))
    return 0


def cmd_stats(args) -> int:
    with Database(args.db) as db:
        s = db.stats()
    print(f"keys: {s.key_count}")
    print(f"entries: {s.entry_count}")
    print(f"single-entry keys: {s.single_entry_fraction:.4f}")
    print(f"mean content bytes per key: {s.mean_content_bytes:.2f}")
    print(f"file size: {s.file_size}")
    return 0


def cmd_repl(args) -> int:
    lex = _load_merged([args.lexicon]) if args.lexicon else None
    db = Database(args.db) if args.db else None
    try:
        while True:
            print("recognizer>>", end="", flush=True)
            line = sys.stdin.readline()
            if not line:
                print()
                return 0
            word = line.strip()
            if not word:
                continue
            if args.fold_case:
                word = word.lower()
            if lex is not None:
                _print_lexicon_analyses(word, lex)
            else:
                _print_db_analyses(word, db)
    finally:
        if db is not None:
            db.close()


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(args.lexicon, args.db, args.flat, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="morphlex",
                     description="English inflectional morphology toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_source(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--lexicon", help="lexicon file (rule mode)")
        g.add_argument("--db", help="compiled database (lookup mode)")
        p.add_argument("--fold-case", action="store_true",
                       help="lowercase input before lookup")

    p = sub.add_parser("recognize", help="analyze words")
    p.add_argument("words", nargs="+", metavar="WORD")
    add_source(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("generate", help="print all inflected forms of a lexicon")
    p.add_argument("--lexicon", action="append", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("compile", help="compile lexicons into a database")
    p.add_argument("--lexicon", action="append", required=True,
                   help="lexicon file; repeat to merge in argument order")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("dump", help="dump a database to the flat format")
    p.add_argument("--db", required=True)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("restore", help="rebuild a database from a flat file")
    p.add_argument("--flat", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_restore)

    p = sub.add_parser("stats", help="report database statistics")
    p.add_argument("--db", required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("repl", help="interactive recognizer session")
    add_source(p)
    p.set_defaults(func=cmd_repl)

    p = sub.add_parser("serve", help="run the maintenance HTTP service")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--db", required=True)
    p.add_argument("--flat", required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", help="directory of UI assets to serve at /")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MorphError, OSError) as e:
        print(f"morphlex: {e}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())

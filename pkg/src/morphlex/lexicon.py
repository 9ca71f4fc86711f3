"""Lexicon files and continuation-class expansion.

A lexicon file holds one entry per nonempty line:

    funky  A_Root2  "A(funky)"

i.e. lexical form, continuation class, double-quoted parse string; ';'
starts a comment running to end of line.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from .core import (
    CLASS_POS,
    Analysis,
    LexicalForm,
    LexiconEntry,
    MorphError,
    Parse,
    ParseStringError,
    parse_parse_string,
)


class LexiconError(MorphError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


# Per-class permitted suffix sequences, in canonical expansion order.
_SUFFIX_SEQS: dict[str, tuple[tuple[str, ...], ...]] = {
    "A_Root1": (),
    "A_Root2": (("er",), ("est",)),
    "N_Root1": (("'s",),),
    "N_Root2": (("s",), ("'s",), ("s", "'s")),
    "V_Root1": (),
    "V_Root2": (("ed",),),
    "V_Root3": (("s",),),
    "V_Root4": (("s",), ("ed",)),
    "V_Root5": (("ing",),),
    "V_Root6": (("ed",), ("ing",)),
    "V_Root7": (("s",), ("ing",)),
    "V_Root8": (("s",), ("ed",), ("ing",)),
    "Pron": (),
    "Prep": (),
    "Det": (),
    "Conj": (),
    "Adv": (),
}

#: Verb classes whose base form gains INF.
_INF_CLASSES = frozenset(f"V_Root{i}" for i in range(2, 9))


def permitted_suffixes(cls: str) -> frozenset[tuple[str, ...]]:
    """The suffix sequences a continuation class allows (base form excluded)."""
    try:
        return frozenset(_SUFFIX_SEQS[cls])
    except KeyError:
        raise ValueError(f"unknown continuation class {cls!r}") from None


def base_parse(entry: LexiconEntry) -> Parse:
    """The parse of the uninflected form: stored parse plus SG for N_Root2
    and INF for V_Root2-8; every other class keeps the parse as is."""
    p = entry.parse
    if entry.cls == "N_Root2":
        return Parse(p.pos, p.root, p.attrs + ("SG",))
    if entry.cls in _INF_CLASSES:
        return Parse(p.pos, p.root, p.attrs + ("INF",))
    return p


def suffix_deltas(cls: str, seq: tuple[str, ...]) -> tuple[tuple[str, ...], ...]:
    """Attribute deltas a suffix sequence contributes under a given class.

    'ed' contributes two deltas (past and past participle); everything
    else contributes one.
    """
    if seq == ("s",):
        return (("PL",),) if cls.startswith("N_") else (("3SG", "PRES"),)
    if seq == ("'s",):
        # N_Root2 genitive is built on the SG-injected base form
        return (("SG", "GEN"),) if cls == "N_Root2" else (("GEN",),)
    if seq == ("s", "'s"):
        return (("PL", "GEN"),)
    if seq == ("ed",):
        return (("PAST", "WK"), ("PPART", "WK"))
    if seq == ("ing",):
        return (("PROG",),)
    if seq == ("er",):
        return (("COMP",),)
    if seq == ("est",):
        return (("SUPER",),)
    raise ValueError(f"illegal suffix sequence {seq!r}")


def expand(entry: LexiconEntry) -> list[tuple[LexicalForm, Parse]]:
    """All (lexical form, parse) pairs an entry generates: the base form
    plus one pair per permitted suffix sequence and delta."""
    pairs = [(LexicalForm(entry.lexical, ()), base_parse(entry))]
    stored = entry.parse
    for seq in _SUFFIX_SEQS[entry.cls]:
        lf = LexicalForm(entry.lexical, seq)
        for delta in suffix_deltas(entry.cls, seq):
            pairs.append((lf, Parse(stored.pos, stored.root, stored.attrs + delta)))
    return pairs


def analyses_for(entry: LexiconEntry, lf: LexicalForm) -> list[Analysis]:
    """The analyses `entry` assigns to lexical form `lf`, or [] if the
    entry's class does not permit lf's suffix sequence."""
    if lf.root != entry.lexical:
        return []
    if not lf.suffixes:
        return [Analysis(lf, base_parse(entry))]
    if lf.suffixes not in _SUFFIX_SEQS[entry.cls]:
        return []
    stored = entry.parse
    return [
        Analysis(lf, Parse(stored.pos, stored.root, stored.attrs + delta))
        for delta in suffix_deltas(entry.cls, lf.suffixes)
    ]


@dataclass(frozen=True)
class Lexicon:
    """An immutable collection of lexicon entries with a lexical-form index."""

    entries: tuple[LexiconEntry, ...]

    def __post_init__(self):
        index: dict[str, list[LexiconEntry]] = {}
        seen: set[LexiconEntry] = set()
        for e in self.entries:
            if e in seen:
                raise LexiconError(f"duplicate entry {e.lexical} {e.cls} "
                                   f'"{e.parse.render()}"')
            seen.add(e)
            index.setdefault(e.lexical, []).append(e)
        object.__setattr__(self, "_index", index)

    def lookup(self, lexical: str) -> list[LexiconEntry]:
        return self._index.get(lexical, [])

    def __len__(self) -> int:
        return len(self.entries)


_LINE_RE = re.compile(r'^(\S+)\s+(\S+)\s+"([^"]*)"$')


def parse_lexicon(text: str) -> Lexicon:
    """Parse lexicon file text; errors carry the offending line number."""
    entries: list[LexiconEntry] = []
    seen: set[LexiconEntry] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split(";", 1)[0].strip()
        if not line:
            continue
        m = _LINE_RE.match(line)
        if not m:
            raise LexiconError(f"malformed entry {line!r}", lineno)
        lexical, cls, parse_str = m.groups()
        if cls not in CLASS_POS:
            raise LexiconError(f"unknown continuation class {cls!r}", lineno)
        try:
            parse = parse_parse_string(parse_str)
            entry = LexiconEntry(lexical, cls, parse)
        except (ParseStringError, ValueError) as e:
            raise LexiconError(str(e), lineno) from None
        if entry in seen:
            raise LexiconError(f"duplicate entry {line!r}", lineno)
        seen.add(entry)
        entries.append(entry)
    return Lexicon(tuple(entries))


def load_lexicon(path) -> Lexicon:
    with open(path, encoding="utf-8") as f:
        return parse_lexicon(f.read())


def merge_lexicons(lexicons) -> Lexicon:
    """Concatenate lexicons in order; duplicate triples across files are
    rejected just like duplicates within one file."""
    entries: list[LexiconEntry] = []
    for lex in lexicons:
        entries.extend(lex.entries)
    return Lexicon(tuple(entries))


def sample_lexicon_path():
    """Path to the bundled sample lexicon (importlib.resources handle)."""
    return resources.files("morphlex").joinpath("data/sample.lex")


def load_sample_lexicon() -> Lexicon:
    return parse_lexicon(sample_lexicon_path().read_text(encoding="utf-8"))

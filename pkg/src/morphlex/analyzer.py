"""Recognizer and generator: spelling inversion validated by the lexicon,
and full inflection of lexicon entries."""
from __future__ import annotations

from .core import Analysis, LexiconEntry, Parse
from .lexicon import Lexicon, analyses_for, expand
from .spelling import segmentations, surface_of


def recognize(surface: str, lex: Lexicon) -> list[Analysis]:
    """All analyses of a surface token; empty list when unrecognized.

    Output is duplicate-free and sorted bytewise by rendered parse string
    (lexical form as tiebreaker).
    """
    results: set[Analysis] = set()
    for candidate in segmentations(surface):
        for entry in lex.lookup(candidate.root):
            results.update(analyses_for(entry, candidate))
    return sorted(
        results,
        key=lambda a: (a.parse.render().encode(), a.lexical_form.render().encode()),
    )


def generate(entry: LexiconEntry) -> list[tuple[str, Parse]]:
    """Every (surface form, parse) pair an entry generates."""
    return [(surface_of(lf), p) for lf, p in expand(entry)]

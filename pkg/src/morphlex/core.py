"""Core value types: parts of speech, attributes, parses, continuation classes.

Everything here is an immutable value; the rest of the package builds on
these types without ever mutating them.
"""
from __future__ import annotations

from dataclasses import dataclass


class MorphError(Exception):
    """Base class for all errors raised by this package."""


class ParseStringError(MorphError):
    """A parse string (e.g. ``V(teach) PAST STR``) is malformed."""


PARTS_OF_SPEECH = ("V", "N", "A", "Adv", "Pron", "Prep", "D", "Conj")

ATTRIBUTES = (
    "1SG", "2SG", "3SG", "1PL", "2PL", "3PL", "2ND", "3RD",
    "SG", "PL", "PROG", "PAST", "PPART", "INF", "PRES",
    "STR", "WK", "GEN", "NOM", "ACC", "NOMACC",
    "NEG", "PASSIVE", "to", "COMP", "SUPER",
    "MASC", "FEM", "NEUT", "WH", "REFL",
    "REF1SG", "REF2ND", "REF2SG", "REF2PL", "REF3SG", "REF3PL",
    "REFMASC", "REFFEM",
)

_POS_SET = frozenset(PARTS_OF_SPEECH)
_ATTR_SET = frozenset(ATTRIBUTES)

#: Continuation class -> part of speech it belongs to.  The determiner
#: class is spelled ``Det`` while its POS tag stays ``D``.
CLASS_POS = {
    "A_Root1": "A",
    "A_Root2": "A",
    "N_Root1": "N",
    "N_Root2": "N",
    "V_Root1": "V",
    "V_Root2": "V",
    "V_Root3": "V",
    "V_Root4": "V",
    "V_Root5": "V",
    "V_Root6": "V",
    "V_Root7": "V",
    "V_Root8": "V",
    "Pron": "Pron",
    "Prep": "Prep",
    "Det": "D",
    "Conj": "Conj",
    "Adv": "Adv",
}

CONTINUATION_CLASSES = tuple(CLASS_POS)

#: Suffix morphemes and the legal suffix sequences built from them.
SUFFIX_MORPHEMES = ("s", "'s", "ed", "ing", "er", "est")

LEGAL_SUFFIX_SEQUENCES = (
    (),
    ("s",),
    ("'s",),
    ("s", "'s"),
    ("ed",),
    ("ing",),
    ("er",),
    ("est",),
)

_LEGAL_SEQ_SET = frozenset(LEGAL_SUFFIX_SEQUENCES)


@dataclass(frozen=True)
class Parse:
    """A morphological analysis: part of speech, root, ordered attributes."""

    pos: str
    root: str
    attrs: tuple[str, ...] = ()

    def __post_init__(self):
        if self.pos not in _POS_SET:
            raise ValueError(f"unknown part of speech {self.pos!r}")
        if not self.root:
            raise ValueError("empty root")
        for a in self.attrs:
            if a not in _ATTR_SET:
                raise ValueError(f"unknown attribute {a!r}")
        if len(set(self.attrs)) != len(self.attrs):
            raise ValueError(f"duplicate attribute in {self.attrs!r}")

    def render(self) -> str:
        head = f"{self.pos}({self.root})"
        if self.attrs:
            return head + " " + " ".join(self.attrs)
        return head


def render_parse(p: Parse) -> str:
    return p.render()


def parse_parse_string(s: str) -> Parse:
    """Inverse of :func:`render_parse`; raises ParseStringError naming the
    offending token."""
    i = s.find("(")
    if i < 0:
        raise ParseStringError(f"missing '(' in {s!r}")
    pos = s[:i]
    if pos not in _POS_SET:
        raise ParseStringError(f"unknown part of speech {pos!r}")
    j = s.find(")", i)
    if j < 0:
        raise ParseStringError(f"missing ')' in {s!r}")
    root = s[i + 1:j]
    if not root:
        raise ParseStringError(f"empty root in {s!r}")
    rest = s[j + 1:]
    attrs: tuple[str, ...] = ()
    if rest:
        if not rest.startswith(" "):
            raise ParseStringError(f"junk after root in {s!r}")
        attrs = tuple(rest[1:].split(" "))
        for a in attrs:
            if a not in _ATTR_SET:
                raise ParseStringError(f"unknown attribute {a!r}")
    try:
        return Parse(pos, root, attrs)
    except ValueError as e:
        raise ParseStringError(str(e)) from None


@dataclass(frozen=True)
class LexicalForm:
    """A root plus suffix morphemes; rendered joined by '+'."""

    root: str
    suffixes: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.root:
            raise ValueError("empty root")
        if "+" in self.root:
            raise ValueError(f"'+' in root {self.root!r}")
        if self.suffixes not in _LEGAL_SEQ_SET:
            raise ValueError(f"illegal suffix sequence {self.suffixes!r}")

    def render(self) -> str:
        return "+".join((self.root,) + self.suffixes)


@dataclass(frozen=True)
class LexiconEntry:
    """One line of the lexicon: lexical form, continuation class, parse."""

    lexical: str
    cls: str
    parse: Parse

    def __post_init__(self):
        if not self.lexical or "+" in self.lexical:
            raise ValueError(f"bad lexical form {self.lexical!r}")
        pos = CLASS_POS.get(self.cls)
        if pos is None:
            raise ValueError(f"unknown continuation class {self.cls!r}")
        if pos != self.parse.pos:
            raise ValueError(
                f"class {self.cls} requires POS {pos}, parse has {self.parse.pos}")


@dataclass(frozen=True)
class Analysis:
    """Recognizer output: the lexical form that matched and its parse."""

    lexical_form: LexicalForm
    parse: Parse

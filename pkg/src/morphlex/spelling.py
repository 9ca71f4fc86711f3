"""Orthographic spelling rules: lexical form -> surface string, and the
inverse segmentation of a surface string into candidate lexical forms.

The six rules, applied at each '+' boundary:

  R1 elision      root-final 'e' drops before a vowel-initial suffix
                  (admire+ing -> admiring); exceptions like 'dyeing' are
                  stored lexically, not handled here
  R2 y -> i       consonant + 'y' becomes 'i' before er/est/ed and before
                  's' (which then triggers R3); 'y' stays before 'ing'
  R3 epenthesis   'e' inserted before suffix 's' after s/z/x/ch/sh or an
                  'i' produced by R2 (teach+s -> teaches, spy+s -> spies)
  R4 s-deletion   suffix "'s" after a stem ending in 's' surfaces as a
                  bare apostrophe (saws+'s -> saws')
  R5 i -> y       root-final 'ie' becomes 'y' before 'ing'
                  (lie+ing -> lying)
  R6 gemination   final consonant doubles before a vowel-initial suffix
                  when the root is monosyllabic and ends single-vowel +
                  consonant, the consonant not being w/x/y
                  (stop+ed -> stopped)

R2 precedes R3 precedes R1; R4/R5/R6 have disjoint trigger contexts.
"""
from __future__ import annotations

from .core import LexicalForm

_VOWELS = frozenset("aeiou")
_NO_GEMINATE = frozenset("wxy")
_SIBILANT_ENDINGS = ("s", "z", "x", "ch", "sh")
_VOWEL_INITIAL = ("ed", "ing", "er", "est")


def _ends_consonant_y(stem: str) -> bool:
    return len(stem) >= 2 and stem[-1] == "y" and stem[-2] not in _VOWELS


def _geminates(stem: str) -> bool:
    # monosyllabic ...CVC with a single final vowel; w/x/y never double
    if len(stem) < 2:
        return False
    last, prev = stem[-1], stem[-2]
    if not last.isalpha() or last in _VOWELS or last in _NO_GEMINATE:
        return False
    if prev not in _VOWELS:
        return False
    return not any(c in _VOWELS for c in stem[:-2])


def _attach(stem: str, suffix: str) -> str:
    if suffix == "'s":
        return stem + "'" if stem.endswith("s") else stem + "'s"  # R4
    if suffix == "s":
        if _ends_consonant_y(stem):
            return stem[:-1] + "ies"  # R2 then R3
        if stem.endswith(_SIBILANT_ENDINGS):
            return stem + "es"  # R3
        return stem + "s"
    assert suffix in _VOWEL_INITIAL
    if suffix == "ing" and stem.endswith("ie"):
        return stem[:-2] + "ying"  # R5
    if suffix != "ing" and _ends_consonant_y(stem):
        return stem[:-1] + "i" + suffix  # R2
    if stem.endswith("e"):
        return stem[:-1] + suffix  # R1
    if _geminates(stem):
        return stem + stem[-1] + suffix  # R6
    return stem + suffix


def surface_of(lf: LexicalForm) -> str:
    """Spell out a lexical form; deterministic, never emits '+' or spaces."""
    stem = lf.root
    for suffix in lf.suffixes:
        stem = _attach(stem, suffix)
    return stem


def _s_roots(stem: str) -> list[str]:
    """Roots r with surface_of(r + 's') possibly equal to `stem`."""
    roots = []
    if stem.endswith("s") and len(stem) >= 2:
        roots.append(stem[:-1])
    if stem.endswith("es") and len(stem) >= 3:
        roots.append(stem[:-2])
    if stem.endswith("ies") and len(stem) >= 4:
        roots.append(stem[:-3] + "y")
    return roots


def segmentations(surface: str) -> list[LexicalForm]:
    """All lexical forms whose surface spelling equals `surface`.

    Candidate roots are proposed by inverting each rule and then verified
    with surface_of, so every returned form is sound.  The zero-suffix
    form is always included; roots are not checked against any lexicon.
    """
    if not surface or any(c.isspace() for c in surface) or "+" in surface:
        raise ValueError(f"not a surface token: {surface!r}")

    out: list[LexicalForm] = [LexicalForm(surface, ())]
    seen = {out[0]}

    def propose(root: str, suffixes: tuple[str, ...]) -> None:
        if not root or "+" in root:
            return
        lf = LexicalForm(root, suffixes)
        if lf not in seen and surface_of(lf) == surface:
            seen.add(lf)
            out.append(lf)

    for root in _s_roots(surface):
        propose(root, ("s",))
    if surface.endswith("'s"):
        propose(surface[:-2], ("'s",))
    if surface.endswith("'"):
        propose(surface[:-1], ("'s",))  # R4: root itself ends in 's'
        for root in _s_roots(surface[:-1]):
            propose(root, ("s", "'s"))
    for suffix in _VOWEL_INITIAL:
        if not surface.endswith(suffix):
            continue
        base = surface[: -len(suffix)]
        if base:
            propose(base, (suffix,))
        propose(base + "e", (suffix,))  # R1
        if suffix == "ing":
            if base.endswith("y"):
                propose(base[:-1] + "ie", (suffix,))  # R5
        elif base.endswith("i"):
            propose(base[:-1] + "y", (suffix,))  # R2
        if len(base) >= 2 and base[-1] == base[-2]:
            propose(base[:-1], (suffix,))  # R6
    return out

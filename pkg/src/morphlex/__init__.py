"""English inflectional morphology: continuation-class lexicon, spelling
rules, recognizer/generator, and a disk-based lookup database."""

from .core import (
    ATTRIBUTES,
    CLASS_POS,
    CONTINUATION_CLASSES,
    PARTS_OF_SPEECH,
    Analysis,
    LexicalForm,
    LexiconEntry,
    MorphError,
    Parse,
    ParseStringError,
    parse_parse_string,
    render_parse,
)
from .spelling import segmentations, surface_of
from .lexicon import (
    Lexicon,
    LexiconError,
    expand,
    load_lexicon,
    load_sample_lexicon,
    merge_lexicons,
    parse_lexicon,
    permitted_suffixes,
    sample_lexicon_path,
)
from .analyzer import generate, recognize
from .db import (
    ComboOverflowError,
    ComboTable,
    CorruptDatabaseError,
    Database,
    DatabaseError,
    compile_db,
    decode_entry,
    dump_flat,
    encode_entry,
    restore_flat,
    write_db,
)

__version__ = "0.1.0"

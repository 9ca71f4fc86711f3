"""Disk-based hash database of inflected forms.

File layout (little-endian):

  header, 40 bytes:
      magic 'MDB1' | version u32 = 1 | bucket_count u32 | key_count u64 |
      combo_offset u64 | records_offset u64 | reserved u32
  bucket directory: bucket_count x u64 absolute record offsets (0 = empty)
  records, in sorted key order, chains linked in ascending key order:
      next u64 | key_len u16 | key bytes | entry_count u16 | entries
  entry wire form: prefix_len u8 | tail_len u8 | tail bytes | combo u8
  combo table: count u16, then per combo: len u8 | string bytes

Keys hash with 64-bit FNV-1a; bucket_count is the smallest power of two
>= 2 x key_count (minimum 8).  The whole file is a pure function of the
key -> entries mapping, so two compiles of the same lexicon are
byte-identical.
"""
from __future__ import annotations

import mmap
import os
import struct
from dataclasses import dataclass

from .core import MorphError, Parse
from .lexicon import Lexicon
from .analyzer import generate

MAGIC = b"MDB1"
VERSION = 1
_HEADER = struct.Struct("<4sIIQQQI")
_U64 = struct.Struct("<Q")
_U16 = struct.Struct("<H")


class DatabaseError(MorphError):
    """I/O-level database failure (as opposed to a key simply being absent)."""


class CorruptDatabaseError(DatabaseError):
    pass


class ComboOverflowError(DatabaseError):
    def __init__(self, combos):
        super().__init__(
            f"{len(combos)} attribute combinations exceed the one-byte "
            f"code space: {', '.join(combos)}")
        self.combos = list(combos)


def fnv1a_64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def combo_of(parse: Parse) -> str:
    """The parse minus its root: 'POS ATTR...'."""
    if parse.attrs:
        return parse.pos + " " + " ".join(parse.attrs)
    return parse.pos


def entry_text(parse: Parse) -> str:
    """Flat-file rendering of one entry: 'root POS ATTR...'."""
    return parse.root + " " + combo_of(parse)


def parse_entry_text(text: str) -> Parse:
    tokens = text.split(" ")
    if len(tokens) < 2:
        raise DatabaseError(f"malformed entry text {text!r}")
    try:
        return Parse(tokens[1], tokens[0], tuple(tokens[2:]))
    except ValueError as e:
        raise DatabaseError(f"malformed entry text {text!r}: {e}") from None


class ComboTable:
    """Bijection between combo strings and one-byte codes; codes are the
    indices of the bytewise-sorted combo list."""

    def __init__(self, combos):
        self.combos = tuple(sorted(set(combos), key=lambda c: c.encode()))
        if len(self.combos) > 256:
            raise ComboOverflowError(self.combos)
        self._codes = {c: i for i, c in enumerate(self.combos)}

    def code_of(self, combo: str) -> int:
        try:
            return self._codes[combo]
        except KeyError:
            raise DatabaseError(f"combo not in table: {combo!r}") from None

    def combo_at(self, code: int) -> str:
        try:
            return self.combos[code]
        except IndexError:
            raise CorruptDatabaseError(f"combo code {code} out of range") from None

    def __len__(self):
        return len(self.combos)


def encode_entry(key: str, root: str, table: ComboTable, combo: str) -> bytes:
    """Wire-encode one entry; payload is 3 bytes plus the root's tail."""
    kb, rb = key.encode(), root.encode()
    n = 0
    while n < len(kb) and n < len(rb) and kb[n] == rb[n]:
        n += 1
    tail = rb[n:]
    if n > 255:
        raise DatabaseError(f"shared prefix of {key!r}/{root!r} exceeds 255 bytes")
    if len(tail) > 255:
        raise DatabaseError(f"root tail of {root!r} exceeds 255 bytes")
    return bytes((n, len(tail))) + tail + bytes((table.code_of(combo),))


def decode_entry(key: str, data: bytes, table: ComboTable) -> Parse:
    """Inverse of encode_entry for a single entry's bytes."""
    parse, end = _decode_entry_at(key.encode(), data, 0, table)
    if end != len(data):
        raise CorruptDatabaseError(f"{len(data) - end} trailing bytes after entry")
    return parse


def _decode_entry_at(key_bytes: bytes, data, pos: int, table: ComboTable):
    if pos + 2 > len(data):
        raise CorruptDatabaseError("truncated entry header")
    prefix_len, tail_len = data[pos], data[pos + 1]
    pos += 2
    if prefix_len > len(key_bytes):
        raise CorruptDatabaseError("entry prefix length exceeds key length")
    if pos + tail_len + 1 > len(data):
        raise CorruptDatabaseError("truncated entry body")
    tail = bytes(data[pos:pos + tail_len])
    pos += tail_len
    code = data[pos]
    pos += 1
    root = (key_bytes[:prefix_len] + tail).decode("utf-8")
    combo = table.combo_at(code)
    tokens = combo.split(" ")
    try:
        parse = Parse(tokens[0], root, tuple(tokens[1:]))
    except ValueError as e:
        raise CorruptDatabaseError(f"bad stored combo {combo!r}: {e}") from None
    return parse, pos


def _build(records: dict[str, list[str]]) -> bytes:
    """Canonical database bytes for a key -> entry-text mapping."""
    keys = sorted(records, key=lambda k: k.encode())
    per_key: list[tuple[str, list[tuple[str, str]]]] = []
    combos: set[str] = set()
    for key in keys:
        texts = sorted(set(records[key]), key=lambda t: t.encode())
        pairs = []
        for text in texts:
            parse = parse_entry_text(text)
            combo = combo_of(parse)
            combos.add(combo)
            pairs.append((parse.root, combo))
        per_key.append((key, pairs))

    table = ComboTable(combos)
    key_count = len(keys)
    bucket_count = 8
    while bucket_count < 2 * key_count:
        bucket_count <<= 1

    bodies: list[bytes] = []
    for key, pairs in per_key:
        kb = key.encode()
        body = bytearray()
        body += _U16.pack(len(kb))
        body += kb
        body += _U16.pack(len(pairs))
        for root, combo in pairs:
            body += encode_entry(key, root, table, combo)
        bodies.append(bytes(body))

    records_offset = _HEADER.size + 8 * bucket_count
    offsets = []
    pos = records_offset
    for body in bodies:
        offsets.append(pos)
        pos += 8 + len(body)
    combo_offset = pos

    heads = [0] * bucket_count
    nexts = [0] * key_count
    chains: dict[int, list[int]] = {}
    for i, key in enumerate(keys):
        chains.setdefault(fnv1a_64(key.encode()) % bucket_count, []).append(i)
    for bucket, idxs in chains.items():
        heads[bucket] = offsets[idxs[0]]
        for a, b in zip(idxs, idxs[1:]):
            nexts[a] = offsets[b]

    out = bytearray()
    out += _HEADER.pack(MAGIC, VERSION, bucket_count, key_count,
                        combo_offset, records_offset, 0)
    for head in heads:
        out += _U64.pack(head)
    for i, body in enumerate(bodies):
        out += _U64.pack(nexts[i])
        out += body
    out += _U16.pack(len(table))
    for combo in table.combos:
        cb = combo.encode()
        out += bytes((len(cb),)) + cb
    return bytes(out)


def compile_db(lex: Lexicon) -> bytes:
    """Compile a lexicon into database bytes: every generated surface form
    becomes a key, entries merged and deduplicated per key."""
    records: dict[str, list[str]] = {}
    for entry in lex.entries:
        for surface, parse in generate(entry):
            records.setdefault(surface, []).append(entry_text(parse))
    return _build(records)


def write_db(path, data: bytes) -> None:
    """Atomic whole-file replacement: write temp, sync, rename."""
    path = os.fspath(path)
    tmp = path + ".tmp"
    with open(tmp, "wb") as f:
        f.write(data)
        f.flush()
        os.fsync(f.fileno())
    os.replace(tmp, path)


@dataclass(frozen=True)
class DbStats:
    key_count: int
    entry_count: int
    single_entry_fraction: float
    mean_content_bytes: float
    file_size: int


class Database:
    """Read-only view of a compiled database file (memory-mapped)."""

    def __init__(self, path):
        self.path = os.fspath(path)
        try:
            self._file = open(self.path, "rb")
        except OSError as e:
            raise DatabaseError(f"cannot open {self.path}: {e}") from None
        try:
            self._size = os.fstat(self._file.fileno()).st_size
            if self._size < _HEADER.size:
                raise CorruptDatabaseError(f"{self.path}: file shorter than header")
            self._mm = mmap.mmap(self._file.fileno(), 0, access=mmap.ACCESS_READ)
            (magic, version, self.bucket_count, self.key_count,
             self._combo_offset, self._records_offset, _reserved) = \
                _HEADER.unpack_from(self._mm, 0)
            if magic != MAGIC:
                raise CorruptDatabaseError(f"{self.path}: bad magic {magic!r}")
            if version != VERSION:
                raise CorruptDatabaseError(f"{self.path}: unsupported version {version}")
            if self.bucket_count < 1 or self.bucket_count & (self.bucket_count - 1):
                raise CorruptDatabaseError(f"{self.path}: bad bucket count")
            self._dir_offset = _HEADER.size
            if self._records_offset != _HEADER.size + 8 * self.bucket_count:
                raise CorruptDatabaseError(f"{self.path}: bad records offset")
            if self._combo_offset > self._size:
                raise CorruptDatabaseError(f"{self.path}: combo table beyond EOF")
            self.combo_table = self._read_combo_table()
        except Exception:
            self.close()
            raise

    def close(self):
        if getattr(self, "_mm", None) is not None:
            self._mm.close()
            self._mm = None
        if getattr(self, "_file", None) is not None:
            self._file.close()
            self._file = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def _read_combo_table(self) -> ComboTable:
        mm, pos = self._mm, self._combo_offset
        if pos + 2 > self._size:
            raise CorruptDatabaseError(f"{self.path}: truncated combo table")
        (count,) = _U16.unpack_from(mm, pos)
        pos += 2
        combos = []
        for _ in range(count):
            if pos + 1 > self._size:
                raise CorruptDatabaseError(f"{self.path}: truncated combo table")
            clen = mm[pos]
            pos += 1
            if pos + clen > self._size:
                raise CorruptDatabaseError(f"{self.path}: truncated combo table")
            combos.append(bytes(mm[pos:pos + clen]).decode("utf-8"))
            pos += clen
        table = ComboTable.__new__(ComboTable)
        table.combos = tuple(combos)  # stored order is already canonical
        table._codes = {c: i for i, c in enumerate(combos)}
        return table

    def _read_record(self, pos: int):
        """-> (next_offset, key_bytes, entries_start, entry_count, end)."""
        mm = self._mm
        if pos + 12 > self._combo_offset:
            raise CorruptDatabaseError(f"{self.path}: truncated record at {pos}")
        (nxt,) = _U64.unpack_from(mm, pos)
        (key_len,) = _U16.unpack_from(mm, pos + 8)
        pos += 10
        if pos + key_len + 2 > self._combo_offset:
            raise CorruptDatabaseError(f"{self.path}: truncated record key")
        key = bytes(mm[pos:pos + key_len])
        pos += key_len
        (entry_count,) = _U16.unpack_from(mm, pos)
        pos += 2
        return nxt, key, pos, entry_count

    def _decode_entries(self, key: bytes, pos: int, count: int):
        parses = []
        payload = 0
        view = self._mm
        for _ in range(count):
            if pos >= self._combo_offset:
                raise CorruptDatabaseError(f"{self.path}: truncated entries")
            start = pos
            parse, pos = _decode_entry_at(key, view, pos, self.combo_table)
            if pos > self._combo_offset:
                raise CorruptDatabaseError(f"{self.path}: entries overrun record region")
            payload += pos - start
            parses.append(parse)
        return parses, payload, pos

    def lookup(self, key: str) -> list[Parse]:
        """Decoded parses for a surface key, in stored order; [] if absent."""
        kb = key.encode()
        bucket = fnv1a_64(kb) % self.bucket_count
        (pos,) = _U64.unpack_from(self._mm, self._dir_offset + 8 * bucket)
        hops = 0
        while pos:
            if pos < self._records_offset or pos >= self._combo_offset:
                raise CorruptDatabaseError(f"{self.path}: chain offset {pos} out of range")
            nxt, rec_key, entries_pos, entry_count = self._read_record(pos)
            if rec_key == kb:
                parses, _, _ = self._decode_entries(rec_key, entries_pos, entry_count)
                return parses
            pos = nxt
            hops += 1
            if hops > self.key_count:
                raise CorruptDatabaseError(f"{self.path}: cyclic bucket chain")
        return []

    def records(self):
        """Iterate (key, [Parse, ...], payload_bytes) in sorted key order."""
        pos = self._records_offset
        for _ in range(self.key_count):
            _, key, entries_pos, entry_count = self._read_record(pos)
            parses, payload, pos = self._decode_entries(key, entries_pos, entry_count)
            yield key.decode("utf-8"), parses, payload

    def stats(self) -> DbStats:
        keys = entries = single = content = 0
        for _, parses, payload in self.records():
            keys += 1
            entries += len(parses)
            single += len(parses) == 1
            content += payload
        return DbStats(
            key_count=keys,
            entry_count=entries,
            single_entry_fraction=(single / keys) if keys else 0.0,
            mean_content_bytes=(content / keys) if keys else 0.0,
            file_size=self._size,
        )


def dump_flat(db: Database) -> str:
    """Human-readable flat rendering: 'key<TAB>entry(#entry)*' per line,
    sorted bytewise by key."""
    lines = []
    for key, parses, _ in db.records():
        lines.append(key + "\t" + "#".join(entry_text(p) for p in parses) + "\n")
    return "".join(lines)


def restore_flat(text: str) -> bytes:
    """Rebuild canonical database bytes from flat text."""
    records: dict[str, list[str]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line:
            continue
        key, tab, rest = line.partition("\t")
        if not tab or not key or not rest:
            raise DatabaseError(f"flat line {lineno}: missing tab separator")
        try:
            for part in rest.split("#"):
                parse_entry_text(part)
        except DatabaseError as e:
            raise DatabaseError(f"flat line {lineno}: {e}") from None
        records.setdefault(key, []).extend(rest.split("#"))
    return _build(records)

"""Binary snapshots of level complexes for resumable long runs.

Layout (all integers little-endian):

    offset  size                 field
    0       4                    magic b"GHLC"
    4       2   u16              format version (currently 1)
    6       2   u16              grid size n
    8       4   i32              doubled Alexander level
    12      8   u64              generator count G
    20      8   u64              boundary entry count E
    28      G*n u8               generator permutations, row-major
    ...     G*4 i32              doubled Maslov gradings
    ...     E*8 (u32, u32)       boundary entries as (target, source) index
                                 pairs into the generator list

Generators appear in the complex's canonical order (Maslov grading, then
lexicographic permutation), so snapshots written by different runs of the
same build are byte-identical.
"""

import struct

import numpy as np

from .errors import GridInputError
from .homology import LevelComplex

MAGIC = b"GHLC"
VERSION = 1
_HEADER = struct.Struct("<4sHHiQQ")


def dump_level(complex_: LevelComplex) -> bytes:
    """Serialize one level complex."""
    n = complex_.n
    if not 2 <= n <= 255:
        raise GridInputError(f"snapshot supports grid sizes 2..255, got {n}")
    gens = np.ascontiguousarray(complex_.gens, dtype=np.uint8)
    maslov = np.ascontiguousarray(complex_.maslov2, dtype="<i4")
    entries = np.empty((len(complex_.rows), 2), dtype="<u4")
    entries[:, 0] = complex_.rows
    entries[:, 1] = complex_.cols
    header = _HEADER.pack(MAGIC, VERSION, n, complex_.alex2,
                          complex_.size, len(complex_.rows))
    return header + gens.tobytes() + maslov.tobytes() + entries.tobytes()


def load_level(blob: bytes) -> LevelComplex:
    """Inverse of dump_level."""
    if len(blob) < _HEADER.size:
        raise GridInputError("snapshot too short for its header")
    magic, version, n, alex2, count, n_entries = _HEADER.unpack_from(blob, 0)
    if magic != MAGIC:
        raise GridInputError(f"bad snapshot magic {magic!r}")
    if version != VERSION:
        raise GridInputError(f"unsupported snapshot version {version}")
    off = _HEADER.size
    sizes = (count * n, count * 4, n_entries * 8)
    if len(blob) != off + sum(sizes):
        raise GridInputError(
            f"snapshot length {len(blob)} does not match header counts")
    gens = np.frombuffer(blob, dtype=np.uint8, count=count * n,
                         offset=off).reshape(count, n).astype(np.int64)
    off += sizes[0]
    maslov = np.frombuffer(blob, dtype="<i4", count=count,
                           offset=off).astype(np.int64)
    off += sizes[1]
    entries = np.frombuffer(blob, dtype="<u4", count=n_entries * 2,
                            offset=off).reshape(n_entries, 2)
    return LevelComplex(alex2=alex2, n=n, gens=gens, maslov2=maslov,
                        rows=entries[:, 0].astype(np.int64),
                        cols=entries[:, 1].astype(np.int64))


def save_level(complex_: LevelComplex, path) -> None:
    with open(path, "wb") as fh:
        fh.write(dump_level(complex_))


def read_level(path) -> LevelComplex:
    with open(path, "rb") as fh:
        return load_level(fh.read())

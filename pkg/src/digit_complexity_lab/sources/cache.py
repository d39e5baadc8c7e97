"""On-disk cache of certified digit prefixes.

File layout: one text header line ``DCL1 <base> <count> <source-spec>``, the
packed digits (eight per byte, least significant bit first, for base 2; one
byte per digit otherwise) and an 8-byte BLAKE2b checksum of everything
before it.
"""

import hashlib
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np
import structlog

from digit_complexity_lab.errors import CacheIntegrityError, CacheSpecError
from digit_complexity_lab.metrics import get_lab_metrics
from digit_complexity_lab.words.word import FiniteWord

from .base import BaseDigitSource

logger = structlog.get_logger(__name__)

MAGIC = "DCL1"
CHECKSUM_BYTES = 8


@dataclass(frozen=True)
class CacheHeader:
    base: int
    count: int
    spec: str

    def encode(self) -> bytes:
        return f"{MAGIC} {self.base} {self.count} {self.spec}\n".encode()


def _checksum(data: bytes) -> bytes:
    return hashlib.blake2b(data, digest_size=CHECKSUM_BYTES).digest()


def _pack(word: FiniteWord) -> bytes:
    if word.base == 2:
        bits = np.frombuffer(word.symbols, dtype=np.uint8)
        return np.packbits(bits, bitorder="little").tobytes()
    return word.symbols


def _unpack(payload: bytes, header: CacheHeader) -> bytes:
    if header.base == 2:
        packed = np.frombuffer(payload, dtype=np.uint8)
        bits = np.unpackbits(packed, count=header.count, bitorder="little")
        return bits.tobytes()
    return payload


def _payload_size(header: CacheHeader) -> int:
    if header.base == 2:
        return (header.count + 7) // 8
    return header.count


def cache_file_name(source: BaseDigitSource) -> str:
    """Stable file name derived from the source spec and base."""
    key = f"{source.base}|{source.spec_string()}".encode()
    return f"{source.get_name()}-{hashlib.sha256(key).hexdigest()[:16]}.dcl"


def cache_store(source: BaseDigitSource, count: int, path: Path) -> Path:
    """Write the first ``count`` digits of ``source`` atomically to ``path``.

    Args:
        source: Digit source; digits are computed if not already streamed.
        count: Number of digits to store.
        path: Destination file.

    Returns:
        Path: The written file.
    """
    word = source.digits(count)
    header = CacheHeader(source.base, count, source.spec_string())
    body = header.encode() + _pack(word)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=".dcl-")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(body + _checksum(body))
        os.replace(tmp_name, path)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise
    get_lab_metrics().cache_operations.labels(operation="write").inc()
    logger.info("cache_stored", path=str(path), base=source.base, count=count)
    return path


def read_cache(path: Path) -> tuple[CacheHeader, FiniteWord]:
    """Read and verify a cache file without checking what it is for.

    Raises:
        CacheIntegrityError: On a wrong version tag, truncation or checksum
            mismatch.
    """
    data = Path(path).read_bytes()
    newline = data.find(b"\n")
    if newline < 0:
        raise CacheIntegrityError(f"{path}: missing header line")
    fields = data[:newline].decode("utf-8", errors="replace").split(" ", 3)
    if len(fields) != 4 or fields[0] != MAGIC:
        raise CacheIntegrityError(f"{path}: not a {MAGIC} cache file")
    try:
        header = CacheHeader(int(fields[1]), int(fields[2]), fields[3])
    except ValueError as e:
        raise CacheIntegrityError(f"{path}: malformed header") from e
    start = newline + 1
    end = start + _payload_size(header)
    if len(data) != end + CHECKSUM_BYTES:
        raise CacheIntegrityError(f"{path}: truncated or oversized file")
    if _checksum(data[:end]) != data[end:]:
        raise CacheIntegrityError(f"{path}: checksum mismatch")
    symbols = _unpack(data[start:end], header)
    get_lab_metrics().cache_operations.labels(operation="read").inc()
    return header, FiniteWord(symbols, header.base)


def cache_load(path: Path, source: Optional[BaseDigitSource] = None) -> FiniteWord:
    """Load cached digits, checking that they belong to ``source`` if given.

    The loaded digits also seed the source's stream.

    Raises:
        CacheIntegrityError: See ``read_cache``.
        CacheSpecError: If base or source spec differ from ``source``.
    """
    header, word = read_cache(path)
    if source is not None:
        if header.base != source.base:
            raise CacheSpecError(
                f"{path}: cached base {header.base}, expected {source.base}"
            )
        if header.spec != source.spec_string():
            raise CacheSpecError(f"{path}: cached digits belong to {header.spec}")
        source.stream.load(word.symbols)
    logger.info("cache_loaded", path=str(path), count=header.count)
    return word

"""
Input ingestion for the command line.

Handles inline words, plain text files, FASTA files and morphism files.
"""

import logging
import os
import sys
from dataclasses import dataclass
from typing import IO, Iterator, List, Optional, Tuple

from errors import EmptyInput, MalformedFasta, MorphismFormatError
from words import InvolutionMap, Word, validate_involution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Record:
    """One named input word."""

    name: str
    text: str

    @property
    def word(self) -> Word:
        return Word.from_text(self.text)

    def __len__(self) -> int:
        return len(self.text)


def _open(path: str) -> Tuple[IO[str], bool]:
    if path == '-':
        return sys.stdin, False
    return open(path, 'r', encoding='utf-8'), True


def read_plain(path: str) -> Record:
    """
    Read a whole file as one word.

    Args:
        path (str): File path, or '-' for stdin

    Returns:
        Record: the contents minus one trailing newline
    """
    handle, owned = _open(path)
    try:
        content = handle.read()
    finally:
        if owned:
            handle.close()

    if content.endswith('\r\n'):
        content = content[:-2]
    elif content.endswith('\n'):
        content = content[:-1]
    if not content:
        raise EmptyInput(f"No letters in {path}")

    name = 'stdin' if path == '-' else os.path.basename(path)
    logger.info(f"Read word of length {len(content)} from {name}")
    return Record(name, content)


def parse_fasta(handle: IO[str]) -> Iterator[Record]:
    """
    Yield one record per FASTA entry; sequence lines are joined and uppercased.

    Raises MalformedFasta for sequence text before the first header and for
    headers with no sequence.
    """
    header: Optional[str] = None
    sequence: List[str] = []
    line_number = 0
    for raw_line in handle:
        line_number += 1
        line = raw_line.strip()
        if not line:
            continue
        if line.startswith('>'):
            if header is not None:
                if not sequence:
                    raise MalformedFasta(f"Record '{header}' has no sequence (line {line_number})")
                yield Record(header, ''.join(sequence).upper())
            header = line[1:].strip()
            sequence = []
        else:
            if header is None:
                raise MalformedFasta(f"Sequence data before the first header (line {line_number})")
            sequence.append(line)

    if header is not None:
        if not sequence:
            raise MalformedFasta(f"Record '{header}' has no sequence")
        yield Record(header, ''.join(sequence).upper())


def read_fasta(path: str) -> List[Record]:
    handle, owned = _open(path)
    try:
        records = list(parse_fasta(handle))
    finally:
        if owned:
            handle.close()
    if not records:
        raise EmptyInput(f"No FASTA records in {path}")
    logger.info(f"Read {len(records)} FASTA record(s) from {path}")
    return records


def ingest(word: Optional[str] = None, path: Optional[str] = None, fasta: bool = False) -> List[Record]:
    """
    Collect the words a command should process.

    Args:
        word (str): Inline word
        path (str): Input file path ('-' for stdin)
        fasta (bool): Parse the input file as FASTA

    Returns:
        List[Record]: records in input order
    """
    if word is not None:
        if not word:
            raise EmptyInput("Inline word is empty")
        return [Record('inline', word)]
    if path is None:
        raise EmptyInput("No input given")
    if fasta:
        return read_fasta(path)
    return [read_plain(path)]


def parse_morphism_lines(lines, name: str = 'custom') -> InvolutionMap:
    """Parse 'A T' pair lines; '#' starts a comment."""
    pairs = []
    for line_number, raw_line in enumerate(lines, start=1):
        line = raw_line.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or len(parts[0]) != 1 or len(parts[1]) != 1:
            raise MorphismFormatError(f"{name}:{line_number}: expected two single-symbol columns, got '{line}'")
        pairs.append((parts[0], parts[1]))
    if not pairs:
        raise MorphismFormatError(f"{name}: no symbol pairs found")

    phi = InvolutionMap.from_pairs(pairs, name=name)
    report = validate_involution(phi)
    if not report.ok:
        raise MorphismFormatError(f"{name}: not an involution at {report.violating_letter} ({report.message})")
    return phi


def load_morphism(source: str) -> InvolutionMap:
    """
    Resolve a --morphism value.

    Args:
        source (str): 'watson-crick', 'mirror', or a path to a pair file

    Returns:
        InvolutionMap: the validated involution
    """
    if source == 'watson-crick':
        return InvolutionMap.watson_crick()
    if source == 'mirror':
        return InvolutionMap.mirror()
    try:
        with open(source, 'r', encoding='utf-8') as f:
            phi = parse_morphism_lines(f, name=os.path.basename(source))
    except OSError as e:
        raise MorphismFormatError(f"Cannot read morphism file {source}: {e}") from e
    logger.info(f"Loaded morphism '{phi.name}' with {len(phi.complement)} mapped letters")
    return phi

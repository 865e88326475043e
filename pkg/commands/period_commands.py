import logging

from config import ORACLE_WARN_LENGTH
from ingest import Record
from minimal_period import minimal_period
from oracle import lmp_oracle, mp_oracle, rmp_oracle
from output import RecordResult
from rmp_engine import EngineStats, annotated_tree, compute_lmp, compute_rmp
from suffix_tree import to_dot

logger = logging.getLogger(__name__)


def warn_if_long(record: Record, options) -> None:
    """Oracles are cubic; say so when they get a long word."""
    if getattr(options, 'oracle', False) and len(record) > ORACLE_WARN_LENGTH:
        logger.warning(f"Oracle on '{record.name}' (n={len(record)}) may be very slow")


def mp_command(record: Record, options) -> RecordResult:
    """Minimal k-th power period of the whole word."""
    warn_if_long(record, options)
    word = record.word
    if options.oracle:
        value = mp_oracle(word, options.s, options.k)
    else:
        value = minimal_period(word, options.s, options.k)
    logger.info(f"mp for '{record.name}': {value}")
    return RecordResult(record.name, len(word), 'mp', value, k=options.k, s=options.s)


def _array_command(record: Record, options, command: str) -> RecordResult:
    warn_if_long(record, options)
    word = record.word
    stats = None
    if options.oracle:
        oracle = rmp_oracle if command == 'rmp' else lmp_oracle
        array = oracle(word, options.s, options.k)
    else:
        engine_stats = EngineStats()
        engine = compute_rmp if command == 'rmp' else compute_lmp
        array = engine(word, options.s, options.k, stats=engine_stats)
        if getattr(options, 'stats', False):
            stats = engine_stats.to_json()
    return RecordResult(record.name, len(word), command, array, k=options.k, s=options.s, stats=stats)


def rmp_command(record: Record, options) -> RecordResult:
    """Right minimal period array."""
    return _array_command(record, options, 'rmp')


def lmp_command(record: Record, options) -> RecordResult:
    """Left minimal period array."""
    return _array_command(record, options, 'lmp')


def tree_command(record: Record, options) -> RecordResult:
    """DOT export of the suffix tree annotated with minimal periods."""
    word = record.word
    tree, rmp = annotated_tree(word, options.s, options.k)
    dot = to_dot(tree, name=record.name)
    return RecordResult(record.name, len(word), 'tree', rmp, k=options.k, s=options.s, dot=dot)

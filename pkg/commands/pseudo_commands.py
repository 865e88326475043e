import logging

from commands.period_commands import warn_if_long
from ingest import Record, load_morphism
from oracle import cmp_oracle, detect_oracle, form_of
from output import RecordResult
from pseudo import Verdict, Witness, compute_cmp, detect
from words import Word

logger = logging.getLogger(__name__)


def _morphism_word(record: Record, options):
    phi = load_morphism(options.morphism)
    return phi, Word.from_text(record.text, phi.joint_alphabet(record.text))


def cmp_command(record: Record, options) -> RecordResult:
    """Centralized maximal pseudo-palindrome array."""
    warn_if_long(record, options)
    phi, word = _morphism_word(record, options)
    array = cmp_oracle(word, phi) if options.oracle else compute_cmp(word, phi)
    return RecordResult(record.name, len(word), 'cmp', array, k=options.k, s=options.s,
                        extra={"morphism": phi.name})


def detect_command(record: Record, options) -> RecordResult:
    """Special pseudo-power detection for one form."""
    warn_if_long(record, options)
    phi, word = _morphism_word(record, options)
    if options.oracle:
        hit = detect_oracle(word, phi, options.k, options.s, options.form)
        witness = None
        if hit is not None:
            position, x = hit
            witness = Witness(position, x, form_of(x, phi, options.k, options.form))
        verdict = Verdict(options.form, options.k, options.s, found=hit is not None, witness=witness)
    else:
        verdict = detect(word, phi, options.k, options.s, options.form)

    logger.info(f"detect {options.form} on '{record.name}': {verdict.verdict}")
    return RecordResult(
        record.name,
        len(word),
        'detect',
        verdict,
        k=options.k,
        s=options.s,
        witness=verdict.witness.to_json() if verdict.witness else None,
        extra={"morphism": phi.name},
    )

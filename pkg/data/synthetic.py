"""Seeded synthetic corpora with planted Adult and Child lexicons.

Real grooming transcripts are never shipped; tests and demos run on these.
"""

import logging
from typing import List, Sequence, Tuple

import numpy as np

from config import DEFAULT_SEED, SYNTH_ADULT_LEXICON, SYNTH_CHILD_LEXICON, SYNTH_NOISE_RATE
from models import Message, OgLabel, Role, Source, Transcript

logger = logging.getLogger(__name__)


def _message_text(
    rng: np.random.Generator,
    own: Sequence[str],
    other: Sequence[str],
    noise: float,
    words: Tuple[int, int],
) -> str:
    length = int(rng.integers(words[0], words[1] + 1))
    tokens = []
    for _ in range(length):
        lexicon = other if rng.random() < noise else own
        tokens.append(str(lexicon[int(rng.integers(len(lexicon)))]))
    return " ".join(tokens)


def _speaker_sequence(rng: np.random.Generator, length: int) -> List[int]:
    # Mostly alternating turns with occasional double messages
    speakers = [int(rng.integers(2))]
    for _ in range(length - 1):
        switch = rng.random() < 0.7
        speakers.append(1 - speakers[-1] if switch else speakers[-1])
    return speakers


def generate_synthetic_corpus(
    n_transcripts: int = 200,
    seed: int = DEFAULT_SEED,
    noise: float = SYNTH_NOISE_RATE,
    negative_fraction: float = 0.0,
    messages_range: Tuple[int, int] = (30, 44),
    words_range: Tuple[int, int] = (4, 10),
) -> List[Transcript]:
    """Generate two-actor transcripts with planted vocabularies.

    Positive transcripts pair an Adult actor (Adult lexicon) with a Child
    actor (Child lexicon) and carry gold roles. Negative transcripts pair two
    actors of the same kind (AA or CC), are labeled Negative and keep
    Unknown gold roles. Each token is drawn from the opposite lexicon with
    probability ``noise``.

    Args:
        n_transcripts: Number of transcripts
        seed: Seed of the generator; equal seeds give equal corpora
        noise: Share of tokens taken from the opposite lexicon, in [0, 0.5)
        negative_fraction: Share of negative transcripts, in [0, 1]
        messages_range: Inclusive bounds of the transcript length
        words_range: Inclusive bounds of the message length in tokens

    Returns:
        Transcripts with ids synth-0000, synth-0001, ...

    Raises:
        ValueError: If a rate or range is out of bounds
    """
    if not 0.0 <= noise < 0.5:
        raise ValueError(f"noise must be in [0, 0.5), got {noise}")
    if not 0.0 <= negative_fraction <= 1.0:
        raise ValueError(f"negative_fraction must be in [0, 1], got {negative_fraction}")
    if messages_range[0] < 1 or messages_range[0] > messages_range[1]:
        raise ValueError(f"invalid messages_range {messages_range}")
    if words_range[0] < 1 or words_range[0] > words_range[1]:
        raise ValueError(f"invalid words_range {words_range}")

    rng = np.random.default_rng(seed)
    lexicons = {Role.ADULT: SYNTH_ADULT_LEXICON, Role.CHILD: SYNTH_CHILD_LEXICON}
    opposite = {Role.ADULT: SYNTH_CHILD_LEXICON, Role.CHILD: SYNTH_ADULT_LEXICON}

    corpus = []
    for index in range(n_transcripts):
        transcript_id = f"synth-{index:04d}"
        negative = rng.random() < negative_fraction
        if negative:
            kind = Role.ADULT if rng.random() < 0.5 else Role.CHILD
            roles = (kind, kind)
        else:
            roles = (Role.ADULT, Role.CHILD)
        actors = (f"{transcript_id}-u{int(rng.integers(1000, 10000))}", f"{transcript_id}-v{int(rng.integers(1000, 10000))}")

        length = int(rng.integers(messages_range[0], messages_range[1] + 1))
        messages = []
        for ordinal, speaker in enumerate(_speaker_sequence(rng, length)):
            role = roles[speaker]
            messages.append(Message(
                actor_id=actors[speaker],
                ordinal=ordinal,
                text=_message_text(rng, lexicons[role], opposite[role], noise, words_range),
                gold_role=Role.UNKNOWN if negative else role,
            ))

        corpus.append(Transcript(
            id=transcript_id,
            source=Source.OTHER,
            messages=messages,
            actor_ids=set(actors),
            og_label=OgLabel.NEGATIVE if negative else OgLabel.POSITIVE,
            attacker_id=None if negative else actors[0],
        ))

    positives = sum(1 for t in corpus if t.og_label is OgLabel.POSITIVE)
    logger.info(f"Generated {len(corpus)} synthetic transcripts ({positives} positive, seed {seed})")
    return corpus

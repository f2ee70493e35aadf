"""External scores file reading and writing.

The file is a TSV with header ``transcript_id\\tordinal\\tscore``; each row
carries one message score in [0, 1] produced outside this package (for
example by a fine-tuned transformer).
"""

import csv
import logging
import math
from pathlib import Path
from typing import Dict, Iterable, Tuple

from config import SCORES_FILE_HEADER
from errors import DuplicateKey, MalformedRow, ScoreOutOfRange
from models import MessageScore

logger = logging.getLogger(__name__)

ScoreKey = Tuple[str, int]


def load_external_scores(path: str, scorer_id: str = "external") -> Dict[ScoreKey, MessageScore]:
    """Read a scores file into a (transcript_id, ordinal) -> MessageScore map.

    Args:
        path: Scores TSV file
        scorer_id: Name attached to every loaded score

    Returns:
        Map covering every row of the file

    Raises:
        MalformedRow: If the header or a row cannot be parsed
        DuplicateKey: If a (transcript_id, ordinal) pair occurs twice
        ScoreOutOfRange: If a score is outside [0, 1] or not a number
    """
    scores: Dict[ScoreKey, MessageScore] = {}
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.reader(f, delimiter="\t")
        header = next(reader, None)
        if header is None or tuple(cell.strip() for cell in header) != SCORES_FILE_HEADER:
            raise MalformedRow(f"expected header {chr(9).join(SCORES_FILE_HEADER)!r}", 1)

        for row in reader:
            line_number = reader.line_num
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 3:
                raise MalformedRow(f"expected 3 columns, got {len(row)}", line_number)

            transcript_id = row[0].strip()
            try:
                ordinal = int(row[1])
                value = float(row[2])
            except ValueError as e:
                raise MalformedRow(str(e), line_number) from e
            if not transcript_id or ordinal < 0:
                raise MalformedRow("transcript_id must be set and ordinal >= 0", line_number)
            if math.isnan(value) or not 0.0 <= value <= 1.0:
                raise ScoreOutOfRange(f"line {line_number}: score {row[2].strip()} outside [0, 1]")

            key = (transcript_id, ordinal)
            if key in scores:
                raise DuplicateKey(f"line {line_number}: duplicate key {transcript_id!r} ordinal {ordinal}")
            scores[key] = MessageScore(value=value, scorer_id=scorer_id)

    logger.info(f"Loaded {len(scores)} external scores from {path}")
    return scores


def write_scores(rows: Iterable[Tuple[str, int, float]], path: str) -> None:
    """Write (transcript_id, ordinal, score) rows as a scores TSV file.

    Scores are written with repr precision so a reload is exact.
    """
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    with open(file_path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, delimiter="\t", lineterminator="\n")
        writer.writerow(SCORES_FILE_HEADER)
        for transcript_id, ordinal, value in rows:
            writer.writerow([transcript_id, ordinal, repr(float(value))])
    logger.info(f"Wrote scores file {file_path}")

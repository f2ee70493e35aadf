"""PJ webpage parsing with semi-automated attacker labeling.

Each page is labeled by the first rule that applies:
1. Formatted processing: lines styled blue and bold are the attacker's.
2. Name processing: lines whose sender matches the page title or a known
   attacker are the attacker's.
3. Otherwise the page needs a manual attacker entry.
"""

import logging
import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from bs4 import BeautifulSoup
from bs4.element import NavigableString, PreformattedString, Tag

from config import (
    BLOCK_TAGS, BLUE_COLORS, BOLD_TAGS, BOLD_WEIGHTS, CHAT_CONTAINER_SELECTORS,
    EMAIL_HEADER_MARKERS, IGNORED_TAGS, SENDER_DELIMITER,
)
from data.corpus_filters import check_label_balance
from errors import DataError, EmailTranscript, MalformedPage, NoSenderFound
from models import AttackerEntryNeeded, AttackerRegistry, Message, OgLabel, Role, Source, Transcript

logger = logging.getLogger(__name__)

_DATE = r"(?:\d{1,4}[/.-]\d{1,2}[/.-]\d{1,4}|[A-Z][a-z]{2,8}\.?\s+\d{1,2},?\s+\d{4})"
_TIME = r"\d{1,2}:\d{2}(?::\d{2})?(?:\s*[AaPp]\.?[Mm]\.?(?![A-Za-z0-9]))?"
_STAMP = rf"(?:{_DATE}(?:,?\s+{_TIME})?|{_TIME})"

# Leading date/time token: (..), [..] or bare followed by whitespace
PREAMBLE_PATTERN = re.compile(
    rf"^\s*(?:\(\s*(?P<paren>{_STAMP})\s*\)"
    rf"|\[\s*(?P<bracket>{_STAMP})\s*\]"
    rf"|(?P<bare>{_STAMP})(?=\s))\s*"
)

ParseResult = Union[Transcript, AttackerEntryNeeded]


@dataclass
class ChatLine:
    """One visual line of a page and whether it carries the attacker style."""
    text: str
    blue_bold: bool = False


@dataclass
class _RawMessage:
    sender: str
    text: str
    timestamp: Optional[str]
    blue_bold: bool


@dataclass
class IngestResult:
    """Outcome of ingesting a batch of PJ pages.

    Attributes:
        transcripts: Labeled transcripts, in input order
        attacker_entry_needed: Pages waiting for a manual attacker entry
        excluded_email: Names of e-mail pages that were skipped
        malformed: Names of pages without extractable message lines
    """
    transcripts: List[Transcript] = field(default_factory=list)
    attacker_entry_needed: List[AttackerEntryNeeded] = field(default_factory=list)
    excluded_email: List[str] = field(default_factory=list)
    malformed: List[str] = field(default_factory=list)


def strip_preamble(line: str) -> Tuple[str, str, Optional[str]]:
    """Split a chat line into sender, text and raw timestamp.

    Leading date/time tokens are removed first; the sender ends at the first
    delimiter after them. Unrecognised prefixes stay part of the sender/text.

    Args:
        line: One extracted message line

    Returns:
        Tuple of (sender, text, timestamp or None)

    Raises:
        NoSenderFound: If the line has no sender delimiter
    """
    timestamp = None
    rest = line
    match = PREAMBLE_PATTERN.match(line)
    if match:
        timestamp = match.group("paren") or match.group("bracket") or match.group("bare")
        rest = line[match.end():]

    sender, delimiter, text = rest.partition(SENDER_DELIMITER)
    sender = sender.strip()
    if not delimiter or not sender:
        raise NoSenderFound(f"No sender in line: {line[:60]!r}")
    return sender, text.strip(), timestamp


def _parse_style(style: str) -> Dict[str, str]:
    declarations = {}
    for declaration in style.split(";"):
        name, _, value = declaration.partition(":")
        if value:
            declarations[name.strip().lower()] = value.strip().lower()
    return declarations


def _is_blue_bold(node: NavigableString) -> bool:
    """True if the ancestors of a text node make it both blue and bold."""
    blue = bold = False
    for parent in node.parents:
        style = _parse_style(parent.get("style") or "")
        color = style.get("color") or (parent.get("color") or "").lower()
        if color.replace(" ", "") in BLUE_COLORS:
            blue = True
        if parent.name in BOLD_TAGS or style.get("font-weight", "") in BOLD_WEIGHTS:
            bold = True
    return blue and bold


class _LineCollector:
    """Walks a page and cuts its text into lines at <br> and block elements."""

    def __init__(self) -> None:
        self.lines: List[ChatLine] = []
        self._parts: List[str] = []
        self._blue_bold = False

    def flush(self) -> None:
        text = " ".join("".join(self._parts).split())
        if text:
            self.lines.append(ChatLine(text=text, blue_bold=self._blue_bold))
        self._parts = []
        self._blue_bold = False

    def walk(self, node: Tag, preformatted: bool = False) -> None:
        for child in node.children:
            if isinstance(child, Tag):
                if child.name in IGNORED_TAGS:
                    continue
                if child.name == "br":
                    self.flush()
                    continue
                block = child.name in BLOCK_TAGS
                if block:
                    self.flush()
                self.walk(child, preformatted or child.name == "pre")
                if block:
                    self.flush()
            elif isinstance(child, NavigableString) and not isinstance(child, PreformattedString):
                self._add_text(child, preformatted)

    def _add_text(self, node: NavigableString, preformatted: bool) -> None:
        chunks = str(node).split("\n") if preformatted else [str(node)]
        for index, chunk in enumerate(chunks):
            if index:
                self.flush()
            self._parts.append(chunk)
            if chunk.strip() and _is_blue_bold(node):
                self._blue_bold = True


def extract_lines(html: bytes) -> List[ChatLine]:
    """Extract the visual text lines of a PJ page.

    The first element matching CHAT_CONTAINER_SELECTORS is used as the chat
    area; pages without one are read from the body.

    Args:
        html: Raw page bytes

    Returns:
        Non-empty lines in document order
    """
    soup = BeautifulSoup(html, "html.parser")
    root = None
    for selector in CHAT_CONTAINER_SELECTORS:
        root = soup.select_one(selector)
        if root is not None:
            break
    if root is None:
        root = soup.body or soup

    collector = _LineCollector()
    collector.walk(root)
    collector.flush()
    return collector.lines


def is_email_transcript(lines: Iterable[str]) -> bool:
    """Check whether page lines carry e-mail headers.

    Args:
        lines: Text lines of a page

    Returns:
        True if every header marker starts at least one line
    """
    seen = set()
    for line in lines:
        lowered = line.strip().lower()
        for marker in EMAIL_HEADER_MARKERS:
            if lowered.startswith(marker):
                seen.add(marker)
    return len(seen) == len(EMAIL_HEADER_MARKERS)


def _assemble_messages(lines: Sequence[ChatLine], page_name: str) -> List[_RawMessage]:
    messages: List[_RawMessage] = []
    for line in lines:
        try:
            sender, text, timestamp = strip_preamble(line.text)
        except NoSenderFound:
            if messages:
                messages[-1].text = f"{messages[-1].text}\n{line.text}"
            else:
                logger.debug(f"{page_name}: skipping line before first message: {line.text[:40]!r}")
            continue
        messages.append(_RawMessage(sender, text, timestamp, line.blue_bold))
    return messages


def _unique(values: Iterable[str]) -> List[str]:
    return list(dict.fromkeys(values))


def parse_pj_page(html: bytes, page_name: str, registry: AttackerRegistry) -> ParseResult:
    """Parse and label one PJ page.

    Args:
        html: Raw page bytes
        page_name: Source file name; its stem is the page title
        registry: Known attacker usernames

    Returns:
        Labeled Transcript, or AttackerEntryNeeded when no rule identifies
        the attacker

    Raises:
        EmailTranscript: If the page is an e-mail exchange
        MalformedPage: If no message lines can be extracted
    """
    lines = extract_lines(html)
    if is_email_transcript(line.text for line in lines):
        raise EmailTranscript(f"{page_name} is an e-mail transcript")

    raw = _assemble_messages(lines, page_name)
    if not raw:
        raise MalformedPage(f"No message lines in {page_name}")

    title = Path(page_name).stem

    if any(message.blue_bold for message in raw):
        is_attacker = [message.blue_bold for message in raw]
        attacker_senders = Counter(m.sender for m in raw if m.blue_bold)
        attacker_id = attacker_senders.most_common(1)[0][0]
        logger.debug(f"{page_name}: formatted processing, attacker {attacker_id}")
    else:
        is_attacker = [
            m.sender.casefold() == title.casefold() or m.sender in registry
            for m in raw
        ]
        if not any(is_attacker):
            logger.warning(f"{page_name}: attacker entry needed")
            return AttackerEntryNeeded(page_name=page_name, senders=_unique(m.sender for m in raw))
        attacker_id = next(m.sender for m, hit in zip(raw, is_attacker) if hit)
        logger.debug(f"{page_name}: name processing, attacker {attacker_id}")

    # All non-attacker lines belong to the decoy, under its first screen name
    child_id = next((m.sender for m, hit in zip(raw, is_attacker) if not hit), None)

    messages = [
        Message(
            actor_id=attacker_id if hit else child_id,
            ordinal=ordinal,
            text=m.text,
            timestamp=m.timestamp,
            gold_role=Role.ADULT if hit else Role.CHILD,
        )
        for ordinal, (m, hit) in enumerate(zip(raw, is_attacker))
    ]
    actor_ids = {attacker_id} | ({child_id} if child_id is not None else set())

    return Transcript(
        id=title,
        source=Source.PJ,
        messages=messages,
        actor_ids=actor_ids,
        og_label=OgLabel.POSITIVE,
        attacker_id=attacker_id,
    )


def _parse_file(path: Path, registry: AttackerRegistry) -> Union[ParseResult, DataError]:
    # Runs in worker processes; errors are returned so one page cannot stop a batch
    try:
        return parse_pj_page(path.read_bytes(), path.name, registry)
    except (EmailTranscript, MalformedPage) as e:
        return e


def ingest_pj_directory(paths: Sequence[Path], registry: AttackerRegistry, workers: int = 1) -> IngestResult:
    """Parse, label and balance-check a batch of PJ pages.

    Args:
        paths: Page files
        registry: Known attacker usernames
        workers: Worker processes; 1 parses in-process

    Returns:
        IngestResult with transcripts in input order
    """
    paths = [Path(p) for p in paths]
    if workers > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_parse_file, paths, [registry] * len(paths)))
    else:
        outcomes = [_parse_file(path, registry) for path in paths]

    result = IngestResult()
    for path, outcome in zip(paths, outcomes):
        if isinstance(outcome, Transcript):
            checked = check_label_balance(outcome)
            if checked.needs_manual_review:
                logger.warning(f"{path.name}: label balance exceeded, flagged for manual review")
            result.transcripts.append(checked)
        elif isinstance(outcome, AttackerEntryNeeded):
            result.attacker_entry_needed.append(outcome)
        elif isinstance(outcome, EmailTranscript):
            logger.warning(f"{path.name}: e-mail transcript excluded")
            result.excluded_email.append(path.name)
        else:
            logger.warning(f"{path.name}: {outcome}")
            result.malformed.append(path.name)

    logger.info(
        f"Ingested {len(result.transcripts)} PJ transcripts "
        f"({len(result.attacker_entry_needed)} need attacker entry, "
        f"{len(result.excluded_email)} e-mail, {len(result.malformed)} malformed)"
    )
    return result

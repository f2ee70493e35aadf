"""PAN12 conversation XML parsing."""

import logging
import xml.etree.ElementTree as ET
from pathlib import Path
from typing import List, Set

from errors import MalformedXml
from models import Message, OgLabel, Role, Source, Transcript

logger = logging.getLogger(__name__)


def _child_text(element: ET.Element, tag: str) -> str:
    child = element.find(tag)
    if child is None or child.text is None:
        return ""
    return child.text


def _line_number(message: ET.Element) -> int:
    try:
        return int(message.get("line", "0"))
    except ValueError:
        return 0


def parse_pan12(conversations_xml: bytes, predator_ids: Set[str]) -> List[Transcript]:
    """Parse a PAN12 conversations file into transcripts.

    A conversation is positive when any author is a known predator. In
    positive conversations predator messages are Adult and all others Child;
    negative conversations stay unlabeled.

    Args:
        conversations_xml: Raw XML bytes
        predator_ids: Author ids from the ground-truth predator list

    Returns:
        One Transcript per conversation, in file order

    Raises:
        MalformedXml: If the XML is not well-formed
    """
    try:
        root = ET.fromstring(conversations_xml)
    except ET.ParseError as e:
        logger.error(f"PAN12 XML parse error: {e}")
        raise MalformedXml(str(e)) from e

    transcripts = []
    for index, conversation in enumerate(root.iter("conversation")):
        conversation_id = conversation.get("id") or f"conversation-{index}"

        # Messages are ordered by their line attribute, ties keep file order
        elements = sorted(conversation.findall("message"), key=_line_number)
        authors = [_child_text(element, "author").strip() for element in elements]
        positive = any(author in predator_ids for author in authors)

        messages = []
        for ordinal, (element, author) in enumerate(zip(elements, authors)):
            if positive:
                role = Role.ADULT if author in predator_ids else Role.CHILD
            else:
                role = Role.UNKNOWN
            time_text = _child_text(element, "time").strip()
            messages.append(Message(
                actor_id=author,
                ordinal=ordinal,
                text=_child_text(element, "text"),
                timestamp=time_text or None,
                gold_role=role,
            ))

        attacker_id = next((author for author in authors if author in predator_ids), None)
        transcripts.append(Transcript(
            id=conversation_id,
            source=Source.PAN12,
            messages=messages,
            actor_ids=set(authors),
            og_label=OgLabel.POSITIVE if positive else OgLabel.NEGATIVE,
            attacker_id=attacker_id,
        ))

    multi_party = sum(1 for t in transcripts if len(t.actor_ids) > 2)
    if multi_party:
        logger.info(f"{multi_party} PAN12 conversations have more than two authors (not peer-to-peer)")
    logger.info(f"Parsed {len(transcripts)} PAN12 conversations")
    return transcripts


def load_pan12_file(path: str, predator_ids: Set[str]) -> List[Transcript]:
    """Read and parse a PAN12 conversations file from disk."""
    return parse_pan12(Path(path).read_bytes(), predator_ids)

"""Transcript model for the AC context detector."""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Set

from models.message import Message


class Source(Enum):
    """Corpus a transcript was ingested from."""
    PJ = "PJ"
    PAN12 = "PAN12"
    OTHER = "Other"


class OgLabel(Enum):
    """Online-grooming label of a whole transcript."""
    POSITIVE = "positive"
    NEGATIVE = "negative"
    UNKNOWN = "unknown"


@dataclass
class Transcript:
    """An ordered two-party (usually) chat transcript.

    Attributes:
        id: Transcript identifier (page name or PAN12 conversation id)
        source: Corpus of origin
        messages: Messages ordered by ordinal
        actor_ids: All senders appearing in the transcript
        og_label: Transcript-level grooming label
        attacker_id: Sender identified as the attacker, if known
        needs_manual_review: Set by the label balance check
    """
    id: str
    source: Source
    messages: List[Message] = field(default_factory=list)
    actor_ids: Set[str] = field(default_factory=set)
    og_label: OgLabel = OgLabel.UNKNOWN
    attacker_id: Optional[str] = None
    needs_manual_review: bool = False

    def __len__(self) -> int:
        return len(self.messages)

    @property
    def is_peer_to_peer(self) -> bool:
        """True if exactly two actors take part (eligible for context experiments)."""
        return len(self.actor_ids) == 2

    def sorted_actors(self) -> List[str]:
        """Return actor ids in a stable order."""
        return sorted(self.actor_ids)

    def messages_by_actor(self) -> Dict[str, List[Message]]:
        """Split messages by sender, keeping transcript order within each actor.

        Returns:
            Dict mapping actor_id -> list of that actor's messages
        """
        split: Dict[str, List[Message]] = {actor: [] for actor in self.sorted_actors()}
        for message in self.messages:
            split.setdefault(message.actor_id, []).append(message)
        return split

    def role_counts(self) -> Counter:
        """Count messages per gold role."""
        return Counter(message.gold_role for message in self.messages)

    def to_dict(self) -> dict:
        """Convert transcript to its canonical JSONL record.

        Returns:
            Dictionary representation of the transcript
        """
        return {
            "id": self.id,
            "source": self.source.value,
            "og_label": self.og_label.value,
            "actors": self.sorted_actors(),
            "attacker": self.attacker_id,
            "needs_manual_review": self.needs_manual_review,
            "messages": [message.to_dict() for message in self.messages],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Transcript":
        """Create Transcript instance from a canonical record.

        Args:
            data: Dictionary with transcript data

        Returns:
            Transcript instance

        Raises:
            KeyError: If a required field is missing
            ValueError: If an enum value is not recognised
        """
        return cls(
            id=data["id"],
            source=Source(data["source"]),
            messages=[
                Message.from_dict(message, ordinal)
                for ordinal, message in enumerate(data["messages"])
            ],
            actor_ids=set(data["actors"]),
            og_label=OgLabel(data.get("og_label", OgLabel.UNKNOWN.value)),
            attacker_id=data.get("attacker"),
            needs_manual_review=bool(data.get("needs_manual_review", False)),
        )


@dataclass
class AttackerEntryNeeded:
    """Workflow result: a PJ page whose attacker could not be identified.

    The attacker's alias must be added to the known-attackers file before
    the page can be labeled.

    Attributes:
        page_name: Source file name of the page
        senders: Sender names found on the page, in order of appearance
    """
    page_name: str
    senders: List[str] = field(default_factory=list)

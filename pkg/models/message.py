"""Message model for the AC context detector."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class Role(Enum):
    """Gold role of a message author."""
    ADULT = "adult"
    CHILD = "child"
    UNKNOWN = "unknown"


@dataclass
class Message:
    """A single chat message inside a transcript.

    Attributes:
        actor_id: Sender identifier (screen name or PAN12 author hash)
        ordinal: Position in the transcript, contiguous from 0
        text: Raw message text after preamble stripping, never normalised
        timestamp: Raw timestamp string as found in the source, or None
        gold_role: Adult/Child label from the corpus, Unknown if unlabeled
    """
    actor_id: str
    ordinal: int
    text: str
    timestamp: Optional[str] = None
    gold_role: Role = Role.UNKNOWN

    def is_labeled(self) -> bool:
        """Return True if the message carries an Adult or Child gold label."""
        return self.gold_role is not Role.UNKNOWN

    def to_dict(self) -> dict:
        """Convert message to its canonical JSONL representation.

        The ordinal is implied by the message position and is not written.

        Returns:
            Dictionary representation of the message
        """
        return {
            "actor": self.actor_id,
            "text": self.text,
            "ts": self.timestamp,
            "gold_role": self.gold_role.value,
        }

    @classmethod
    def from_dict(cls, data: dict, ordinal: int) -> "Message":
        """Create Message instance from its canonical dictionary.

        Args:
            data: Dictionary with message data
            ordinal: Position of the message in its transcript

        Returns:
            Message instance
        """
        return cls(
            actor_id=data["actor"],
            ordinal=ordinal,
            text=data["text"],
            timestamp=data.get("ts"),
            gold_role=Role(data.get("gold_role", Role.UNKNOWN.value)),
        )

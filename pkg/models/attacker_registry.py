"""Known-attackers registry for the AC context detector."""

from dataclasses import dataclass, field
from typing import Iterable, Set


@dataclass
class AttackerRegistry:
    """Set of known attacker usernames, compared case-insensitively.

    Attributes:
        usernames: Case-folded usernames
    """
    usernames: Set[str] = field(default_factory=set)

    @staticmethod
    def normalize(username: str) -> str:
        """Return the comparison form of a username."""
        return username.strip().casefold()

    def add(self, username: str) -> bool:
        """Add a username.

        Args:
            username: Username as typed or found on a page

        Returns:
            True if the username was new, False if it was already known
        """
        key = self.normalize(username)
        if not key or key in self.usernames:
            return False
        self.usernames.add(key)
        return True

    def __contains__(self, username: object) -> bool:
        if not isinstance(username, str):
            return False
        return self.normalize(username) in self.usernames

    def __len__(self) -> int:
        return len(self.usernames)

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "AttackerRegistry":
        """Build a registry from an iterable of usernames."""
        registry = cls()
        for name in names:
            registry.add(name)
        return registry

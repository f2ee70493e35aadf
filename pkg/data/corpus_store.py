"""CorpusStore handles canonical JSONL I/O and the plain-text side files."""

import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Set, Tuple

from data.lock_manager import LockManager
from errors import MalformedRecord
from models import AttackerRegistry, Transcript
from models.message import Role
from models.transcript import OgLabel, Source

logger = logging.getLogger(__name__)

_REQUIRED_KEYS = ("id", "source", "actors", "messages")


class CorpusStore:
    """Persistence for corpora and their side files.

    Handles:
    - Canonical JSONL read/write (one transcript per line, atomic writes)
    - Record validation with line numbers
    - Known-attackers and predator-id files
    - Content digests for overlap detection and report manifests
    """

    @staticmethod
    def write_canonical(corpus: List[Transcript], path: str) -> None:
        """Write a corpus as canonical JSONL.

        Args:
            corpus: Transcripts to write
            path: Output file; parent directories are created

        Raises:
            OSError: If the file cannot be written
        """
        file_to_save = Path(path)
        try:
            file_to_save.parent.mkdir(parents=True, exist_ok=True)

            # Write to temporary file first (atomic write)
            temp_file = file_to_save.with_name(file_to_save.name + ".tmp")
            with open(temp_file, "w", encoding="utf-8") as f:
                for transcript in corpus:
                    f.write(json.dumps(transcript.to_dict(), ensure_ascii=False))
                    f.write("\n")
            temp_file.replace(file_to_save)

            logger.info(f"Saved {len(corpus)} transcripts to {file_to_save}")

        except Exception as e:
            logger.error(f"Error saving corpus: {e}")
            raise

    @staticmethod
    def read_canonical(path: str) -> List[Transcript]:
        """Read a canonical JSONL corpus.

        Args:
            path: Input file

        Returns:
            Transcripts in file order

        Raises:
            MalformedRecord: If a line is not a valid transcript record
            OSError: If the file cannot be read
        """
        corpus = []
        with open(path, "r", encoding="utf-8") as f:
            for line_number, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                corpus.append(CorpusStore.parse_record(line, line_number))

        logger.info(f"Loaded {len(corpus)} transcripts from {path}")
        return corpus

    @staticmethod
    def parse_record(line: str, line_number: int) -> Transcript:
        """Decode and validate one JSONL line."""
        try:
            data = json.loads(line)
        except json.JSONDecodeError as e:
            raise MalformedRecord(f"invalid JSON: {e}", line_number) from e

        is_valid, errors = CorpusStore.validate_record(data)
        if not is_valid:
            raise MalformedRecord("; ".join(errors), line_number)

        try:
            return Transcript.from_dict(data)
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedRecord(f"invalid record: {e}", line_number) from e

    @staticmethod
    def validate_record(data: Any) -> Tuple[bool, List[str]]:
        """Validate the structure of a canonical record.

        Args:
            data: Decoded JSON value

        Returns:
            Tuple of (is_valid, list_of_error_messages)
        """
        if not isinstance(data, dict):
            return False, ["record must be a JSON object"]

        errors = [f"missing required field '{key}'" for key in _REQUIRED_KEYS if key not in data]
        if errors:
            return False, errors

        if data["source"] not in {s.value for s in Source}:
            errors.append(f"unknown source {data['source']!r}")
        if data.get("og_label", OgLabel.UNKNOWN.value) not in {label.value for label in OgLabel}:
            errors.append(f"unknown og_label {data.get('og_label')!r}")
        if not isinstance(data["actors"], list) or not all(isinstance(a, str) for a in data["actors"]):
            errors.append("actors must be a list of strings")
            return False, errors
        if not isinstance(data["messages"], list):
            errors.append("messages must be a list")
            return False, errors

        actors = set(data["actors"])
        attacker = data.get("attacker")
        if attacker is not None and attacker not in actors:
            errors.append(f"attacker {attacker!r} is not an actor")

        roles = {role.value for role in Role}
        for position, message in enumerate(data["messages"]):
            if not isinstance(message, dict) or not isinstance(message.get("actor"), str) or "text" not in message:
                errors.append(f"message {position} needs 'actor' and 'text'")
                continue
            if message["actor"] not in actors:
                errors.append(f"message {position} actor {message['actor']!r} is not listed in actors")
            if message.get("gold_role", Role.UNKNOWN.value) not in roles:
                errors.append(f"message {position} has unknown gold_role {message.get('gold_role')!r}")

        return len(errors) == 0, errors

    # ========================================================================
    # Side files
    # ========================================================================

    @staticmethod
    def load_attacker_registry(path: str) -> AttackerRegistry:
        """Read the known-attackers file (one username per line, # comments).

        A missing file yields an empty registry.
        """
        registry = AttackerRegistry()
        file_path = Path(path)
        if not file_path.exists():
            logger.info(f"Attackers file not found at {file_path}, starting empty")
            return registry

        with open(file_path, "r", encoding="utf-8") as f:
            for line in f:
                name = line.split("#", 1)[0].strip()
                if name:
                    registry.add(name)
        logger.info(f"Loaded {len(registry)} known attackers from {file_path}")
        return registry

    @staticmethod
    def attacker_entry(path: str, username: str) -> AttackerRegistry:
        """Add a username to the known-attackers file under a writer lock.

        Args:
            path: Known-attackers file (created if missing)
            username: Alias to add

        Returns:
            The registry after the entry

        Raises:
            DataError: If another writer holds the lock
        """
        lock = LockManager(path)
        with lock.locked():
            registry = CorpusStore.load_attacker_registry(path)
            if registry.add(username):
                file_path = Path(path)
                file_path.parent.mkdir(parents=True, exist_ok=True)
                existing = file_path.read_text(encoding="utf-8") if file_path.exists() else ""
                needs_newline = bool(existing) and not existing.endswith("\n")
                with open(file_path, "a", encoding="utf-8") as f:
                    if needs_newline:
                        f.write("\n")
                    f.write(f"{username.strip()}\n")
                logger.info(f"Added attacker {username!r} to {file_path}")
            else:
                logger.info(f"Attacker {username!r} already known")
        return registry

    @staticmethod
    def load_predator_ids(path: str) -> Set[str]:
        """Read the predator-ids file (one id per line)."""
        with open(path, "r", encoding="utf-8") as f:
            ids = {line.strip() for line in f if line.strip()}
        logger.info(f"Loaded {len(ids)} predator ids from {path}")
        return ids

    # ========================================================================
    # Digests
    # ========================================================================

    @staticmethod
    def transcript_digest(transcript: Transcript) -> str:
        """Content digest independent of transcript id and actor naming.

        Actors are replaced by their order of first appearance, so the same
        conversation shipped in two corpora under different names matches.
        """
        aliases: Dict[str, int] = {}
        digest = hashlib.sha256()
        for message in transcript.messages:
            alias = aliases.setdefault(message.actor_id, len(aliases))
            digest.update(f"{alias}\x1f{message.text}\x1e".encode("utf-8"))
        return digest.hexdigest()

    @staticmethod
    def corpus_digest(corpus: List[Transcript]) -> str:
        """sha256 over the canonical serialization of a corpus."""
        digest = hashlib.sha256()
        for transcript in corpus:
            digest.update(json.dumps(transcript.to_dict(), ensure_ascii=False, sort_keys=True).encode("utf-8"))
            digest.update(b"\n")
        return digest.hexdigest()

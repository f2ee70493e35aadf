"""LockManager guards single-writer edits of shared corpus files."""

import json
import os
import socket
from contextlib import contextmanager
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, Iterator, Optional, Tuple
import logging

from config import LOCK_SUFFIX, LOCK_TIMEOUT_SECONDS
from errors import DataError

logger = logging.getLogger(__name__)


class LockManager:
    """Lock file next to a target file (e.g. the known-attackers file).

    Provides:
    - Lock acquisition and release
    - Stale lock detection (timeout)
    - A context manager for one guarded write
    """

    def __init__(self, target: str, timeout_seconds: int = LOCK_TIMEOUT_SECONDS):
        """Initialize LockManager.

        Args:
            target: File the lock protects
            timeout_seconds: Age after which a lock is considered stale
        """
        self.target = Path(target)
        self.lock_file = self.target.with_name(self.target.name + LOCK_SUFFIX)
        self.timeout_seconds = timeout_seconds
        self._lock_info: Optional[Dict] = None

    def acquire_lock(self, owner: str) -> Tuple[bool, Optional[Dict]]:
        """Try to acquire the lock.

        Args:
            owner: Identifier of the writer (e.g. "user@host")

        Returns:
            Tuple of (success, existing_lock_info_if_failed)
        """
        try:
            if self.lock_file.exists():
                existing_lock = self._read_lock()
                if existing_lock is None or self._is_lock_stale(existing_lock):
                    logger.info(f"Removing stale lock on {self.target.name}")
                    self.lock_file.unlink()
                else:
                    logger.warning(f"{self.target.name} locked by {existing_lock.get('owner')}")
                    return False, existing_lock

            lock_data = self._create_lock_data(owner)
            self.lock_file.parent.mkdir(parents=True, exist_ok=True)

            # O_EXCL: creation fails if another writer created the lock meanwhile
            fd = os.open(self.lock_file, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(lock_data, f, indent=2)

            self._lock_info = lock_data
            logger.debug(f"Lock on {self.target.name} acquired by {owner}")
            return True, None

        except FileExistsError:
            return False, self._read_lock()
        except Exception as e:
            logger.error(f"Error acquiring lock: {e}")
            raise

    def release_lock(self) -> bool:
        """Release the lock if this manager holds it.

        Returns:
            True if the lock was released
        """
        try:
            if self._lock_info is not None and self.lock_file.exists():
                self.lock_file.unlink()
                self._lock_info = None
                logger.debug(f"Lock on {self.target.name} released")
                return True
            return False

        except Exception as e:
            logger.warning(f"Error releasing lock: {e}")
            return False

    @contextmanager
    def locked(self, owner: Optional[str] = None) -> Iterator[None]:
        """Hold the lock for the duration of a with-block.

        Raises:
            DataError: If another writer holds the lock
        """
        owner = owner or f"{os.getenv('USER', 'user')}@{socket.gethostname()}"
        success, existing = self.acquire_lock(owner)
        if not success:
            holder = existing.get("owner") if existing else "unknown"
            raise DataError(f"{self.target} is being edited by {holder}")
        try:
            yield
        finally:
            self.release_lock()

    # ========================================================================
    # Private helper methods
    # ========================================================================

    def _read_lock(self) -> Optional[Dict]:
        try:
            with open(self.lock_file, "r", encoding="utf-8") as f:
                return json.load(f)
        except (OSError, json.JSONDecodeError):
            return None

    def _create_lock_data(self, owner: str) -> Dict:
        return {
            "owner": owner,
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "pid": os.getpid(),
            "hostname": socket.gethostname(),
        }

    def _is_lock_stale(self, lock_data: Dict) -> bool:
        """Check if a lock is older than the timeout threshold."""
        try:
            lock_time = datetime.fromisoformat(lock_data.get("timestamp", ""))
        except ValueError:
            return True
        if lock_time.tzinfo is None:
            lock_time = lock_time.replace(tzinfo=timezone.utc)

        age_seconds = (datetime.now(timezone.utc) - lock_time).total_seconds()
        if age_seconds > self.timeout_seconds:
            logger.debug(f"Lock is stale: {age_seconds:.0f}s old (timeout: {self.timeout_seconds}s)")
            return True
        return False

"""Data models for the AC context detector."""

from .message import Message, Role
from .transcript import AttackerEntryNeeded, OgLabel, Source, Transcript
from .attacker_registry import AttackerRegistry
from .scores import ConfusionCounts, MessageScore, MlaCounts, MlaOutcome, Outcome
from .classifier import LinearKind, LinearModel, NbModel
from .context import ActorDetermination, ActorLabel, Thresholds, TranscriptContext
from .experiment import ExperimentConfig, ExperimentReport

__all__ = [
    "Message", "Role",
    "Transcript", "Source", "OgLabel", "AttackerEntryNeeded",
    "AttackerRegistry",
    "MessageScore", "MlaCounts", "MlaOutcome", "ConfusionCounts", "Outcome",
    "NbModel", "LinearModel", "LinearKind",
    "Thresholds", "ActorDetermination", "ActorLabel", "TranscriptContext",
    "ExperimentConfig", "ExperimentReport",
]

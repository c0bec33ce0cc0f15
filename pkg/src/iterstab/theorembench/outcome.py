from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Dict, Optional


class Status(str, enum.Enum):
    AGREES = "agrees"
    DISAGREES = "disagrees"
    # inconclusive within budget, e.g. a higher-weight instance that survives the scan
    ANOMALY = "anomaly"
    # instance outside the statement's hypotheses
    GATE = "gate"


@dataclass(frozen=True)
class TheoremOutcome:
    theorem_id: str
    instance: Dict[str, Any]
    prediction: str
    observed: Dict[str, Any] = field(default_factory=dict)
    status: Status = Status.AGREES
    witness: Optional[str] = None
    reason: Optional[str] = None

    @property
    def agrees(self):
        """True/False for a decided instance, None for gate and anomaly outcomes."""
        if self.status == Status.AGREES:
            return True
        if self.status == Status.DISAGREES:
            return False
        return None

    @property
    def is_gate(self):
        return self.status == Status.GATE

    def to_record(self):
        rec = {
            "theorem_id": self.theorem_id,
            "instance": self.instance,
            "prediction": self.prediction,
            "observed": self.observed,
            "status": self.status.value,
        }
        if self.agrees is not None:
            rec["agrees"] = self.agrees
        if self.witness is not None:
            rec["witness"] = self.witness
        if self.reason is not None:
            rec["reason"] = self.reason
        return rec


def gate(theorem_id, instance, prediction, reason):
    return TheoremOutcome(theorem_id, instance, prediction, status=Status.GATE, reason=reason)

"""Task specifications for the six benchmark skills."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

SKILLS = ("move_near", "upright", "knock", "drawer_open", "drawer_close", "pick")
_NEEDS_REFERENCE = ("move_near", "pick")
DRAWER_ID = "drawer"  # sentinel subject for drawer skills


class TaskError(ValueError):
    pass


@dataclass(frozen=True)
class TaskSpec:
    skill: str
    subject_id: str
    reference_id: Optional[str] = None

    def __post_init__(self):
        if self.skill not in SKILLS:
            raise TaskError(f"unknown skill '{self.skill}'")
        if self.skill in _NEEDS_REFERENCE and self.reference_id is None:
            raise TaskError(f"{self.skill} requires reference_id")
        if self.skill not in _NEEDS_REFERENCE and self.reference_id is not None:
            raise TaskError(f"{self.skill} forbids reference_id")

    def object_ids(self) -> list[str]:
        """Scene object ids the task references (the drawer is not an object)."""
        ids = []
        if self.subject_id != DRAWER_ID:
            ids.append(self.subject_id)
        if self.reference_id is not None:
            ids.append(self.reference_id)
        return ids


def default_task(skill: str) -> TaskSpec:
    """TaskSpec with the ids reset() assigns: subject obj0, reference obj1."""
    if skill in ("drawer_open", "drawer_close"):
        return TaskSpec(skill, DRAWER_ID)
    if skill in _NEEDS_REFERENCE:
        return TaskSpec(skill, "obj0", "obj1")
    return TaskSpec(skill, "obj0")


def task_to_dict(task: TaskSpec) -> dict:
    return {"skill": task.skill, "subject_id": task.subject_id,
            "reference_id": task.reference_id}


def task_from_dict(d: dict) -> TaskSpec:
    return TaskSpec(d["skill"], d["subject_id"], d.get("reference_id"))

"""Core world-state and action types for the 2D tabletop."""
from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict
from typing import Optional

import numpy as np

SHAPES = ("circle", "square", "triangle", "bar")
ORIENTATIONS = ("upright", "sideways")

MODE_ARM = 0
MODE_BASE = 1
MODE_TERMINATE = 2
ACTION_DIM = 11  # 7 arm + 3 base + 1 mode flag

# arm slot layout: x, y, z, roll, pitch, yaw, gripper width
ARM_X, ARM_Y, ARM_Z, ARM_ROLL, ARM_PITCH, ARM_YAW, ARM_WIDTH = range(7)


class SimError(ValueError):
    """Invalid state/action/configuration handed to the simulator."""


@dataclass
class ObjectSpec:
    id: str
    shape: str
    color: tuple[int, int, int]
    position: tuple[float, float]
    orientation: str = "upright"
    movable: bool = True

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise SimError(f"unknown shape '{self.shape}'")
        if self.orientation not in ORIENTATIONS:
            raise SimError(f"unknown orientation '{self.orientation}'")
        self.color = tuple(int(c) for c in self.color)
        self.position = _clamp_point(self.position)


@dataclass
class GripperState:
    position: tuple[float, float]
    closed: bool = False
    held: Optional[str] = None


@dataclass
class DrawerState:
    openness: float = 0.0


@dataclass
class SceneState:
    objects: list[ObjectSpec]
    gripper: GripperState
    drawer: DrawerState = field(default_factory=DrawerState)
    rng_seed: int = 0
    terminal: bool = False

    def object_by_id(self, obj_id: str) -> ObjectSpec:
        for obj in self.objects:
            if obj.id == obj_id:
                return obj
        raise SimError(f"no object with id '{obj_id}' in scene")

    def has_object(self, obj_id: str) -> bool:
        return any(o.id == obj_id for o in self.objects)

    def clone(self) -> "SceneState":
        return SceneState(
            objects=[ObjectSpec(o.id, o.shape, o.color, o.position, o.orientation, o.movable)
                     for o in self.objects],
            gripper=GripperState(self.gripper.position, self.gripper.closed, self.gripper.held),
            drawer=DrawerState(self.drawer.openness),
            rng_seed=self.rng_seed,
            terminal=self.terminal,
        )

    def validate(self) -> None:
        ids = [o.id for o in self.objects]
        if len(ids) != len(set(ids)):
            raise SimError("duplicate object ids in scene")
        g = self.gripper
        if not g.closed and g.held is not None:
            raise SimError("held object with open gripper")
        if g.held is not None:
            obj = self.object_by_id(g.held)
            if not obj.movable:
                raise SimError("held object is not movable")
            if obj.position != g.position:
                raise SimError("held object not at gripper position")
        if not 0.0 <= self.drawer.openness <= 1.0:
            raise SimError(f"drawer openness {self.drawer.openness} outside [0,1]")
        for o in self.objects:
            x, y = o.position
            if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
                raise SimError(f"object {o.id} outside the unit square")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @staticmethod
    def from_json(blob: str) -> "SceneState":
        d = json.loads(blob)
        return SceneState(
            objects=[ObjectSpec(o["id"], o["shape"], tuple(o["color"]),
                                tuple(o["position"]), o["orientation"], o["movable"])
                     for o in d["objects"]],
            gripper=GripperState(tuple(d["gripper"]["position"]),
                                 d["gripper"]["closed"], d["gripper"]["held"]),
            drawer=DrawerState(d["drawer"]["openness"]),
            rng_seed=d["rng_seed"],
            terminal=d["terminal"],
        )


@dataclass
class ActionVector:
    """11-slot action: 7 arm reals + 3 base reals (all in [-1,1]) + mode flag."""

    arm: np.ndarray
    base: np.ndarray
    mode: int = MODE_ARM

    def __post_init__(self):
        self.arm = np.asarray(self.arm, dtype=np.float64)
        self.base = np.asarray(self.base, dtype=np.float64)
        if self.arm.shape != (7,) or self.base.shape != (3,):
            raise SimError("arm must have 7 slots and base 3")
        if self.mode not in (MODE_ARM, MODE_BASE, MODE_TERMINATE):
            raise SimError(f"invalid mode {self.mode}")

    def clipped(self) -> "ActionVector":
        return ActionVector(np.clip(self.arm, -1.0, 1.0),
                            np.clip(self.base, -1.0, 1.0), self.mode)

    def to_array(self) -> np.ndarray:
        out = np.empty(ACTION_DIM, dtype=np.float64)
        out[:7] = self.arm
        out[7:10] = self.base
        out[10] = float(self.mode)
        return out

    @staticmethod
    def from_array(arr) -> "ActionVector":
        arr = np.asarray(arr, dtype=np.float64)
        if arr.shape != (ACTION_DIM,):
            raise SimError(f"action array must have {ACTION_DIM} slots")
        return ActionVector(arr[:7].copy(), arr[7:10].copy(), int(round(arr[10])))

    @staticmethod
    def zeros(mode: int = MODE_ARM) -> "ActionVector":
        return ActionVector(np.zeros(7), np.zeros(3), mode)

    @staticmethod
    def terminate() -> "ActionVector":
        return ActionVector(np.zeros(7), np.zeros(3), MODE_TERMINATE)


def arm_action(dx=0.0, dy=0.0, roll=0.0, width=0.0) -> ActionVector:
    a = ActionVector.zeros()
    a.arm[ARM_X] = dx
    a.arm[ARM_Y] = dy
    a.arm[ARM_ROLL] = roll
    a.arm[ARM_WIDTH] = width
    return a


def _clamp_point(p) -> tuple[float, float]:
    x, y = float(p[0]), float(p[1])
    return (min(max(x, 0.0), 1.0), min(max(y, 0.0), 1.0))

"""Deterministic 2D tabletop kinematics.

step() is a pure function: it never mutates its input and the same
(state, action) pair always yields the same successor. There are no contact
dynamics — objects move only while held (snap-attach grasping), and the drawer
is a 1D slider driven by arm motion near its handle. The z / pitch / yaw arm
slots and the base slots are accepted but ignored by the 2D physics.
"""
from __future__ import annotations

import math

import numpy as np

from ..config import EnvConfig
from .tasks import DRAWER_ID, TaskSpec, TaskError
from .types import (ARM_ROLL, ARM_WIDTH, ARM_X, ARM_Y, MODE_BASE,
                    MODE_TERMINATE, SHAPES, ActionVector, DrawerState,
                    GripperState, ObjectSpec, SceneState, SimError)


def drawer_front_y(openness: float, cfg: EnvConfig) -> float:
    return cfg.drawer_front_base + cfg.drawer_travel * openness


def drawer_handle_position(state: SceneState, cfg: EnvConfig) -> tuple[float, float]:
    x = 0.5 * (cfg.drawer_x0 + cfg.drawer_x1)
    return (x, drawer_front_y(state.drawer.openness, cfg))


# ---------------------------------------------------------------------------
# reset
# ---------------------------------------------------------------------------
def reset(task: TaskSpec, seed: int, cfg: EnvConfig) -> SceneState:
    """Build the initial scene for a task. Deterministic in (task, seed)."""
    rng = np.random.default_rng(seed)
    lo = cfg.spawn_margin
    hi = 1.0 - cfg.spawn_margin
    ylo = max(cfg.spawn_min_y, lo)

    needed = len(task.object_ids())
    n_extra = int(rng.integers(0, cfg.max_extra_objects + 1))
    total = needed + n_extra

    positions: list[tuple[float, float]] = []
    for _ in range(total):
        positions.append(_sample_position(rng, positions, lo, hi, ylo, cfg.min_spacing))
    if task.skill == "pick":
        # re-seat the subject adjacent to the reference ("pick X from Y")
        ref = positions[1]
        ang = rng.uniform(0.0, 2.0 * math.pi)
        d = cfg.min_spacing * 0.62
        positions[0] = (_clamp(ref[0] + d * math.cos(ang), lo, hi),
                        _clamp(ref[1] + d * math.sin(ang), ylo, hi))

    shape_perm = list(rng.permutation(len(SHAPES)))
    color_idx = list(rng.permutation(len(cfg.palette)))

    objects: list[ObjectSpec] = []
    for i in range(total):
        if i < needed:
            shape = SHAPES[shape_perm[i % len(SHAPES)]]
        else:
            shape = SHAPES[int(rng.integers(0, len(SHAPES)))]
        color = cfg.palette[color_idx[i % len(color_idx)]]
        orientation = "upright"
        if i >= needed and rng.random() < 0.15:
            orientation = "sideways"
        objects.append(ObjectSpec(f"obj{i}", shape, color, positions[i], orientation))

    if task.subject_id != DRAWER_ID:
        subject = _find(objects, task.subject_id, task)
        if task.skill == "upright":
            subject.orientation = "sideways"
        elif task.skill == "knock":
            subject.orientation = "upright"

    openness = 1.0 if task.skill == "drawer_close" else 0.0
    state = SceneState(
        objects=objects,
        gripper=GripperState(position=cfg.gripper_home, closed=False, held=None),
        drawer=DrawerState(openness=openness),
        rng_seed=int(seed),
    )
    state.validate()
    return state


def _find(objects, obj_id, task):
    for o in objects:
        if o.id == obj_id:
            return o
    raise TaskError(f"task references missing object '{obj_id}' "
                    f"(skill {task.skill} expects reset-assigned ids obj0, obj1, ...)")


def _sample_position(rng, existing, lo, hi, ylo, min_spacing, attempts=256):
    for _ in range(attempts):
        x = rng.uniform(lo, hi)
        y = rng.uniform(ylo, hi)
        if all(math.dist((x, y), p) >= min_spacing for p in existing):
            return (x, y)
    raise SimError("could not place objects without overlap; relax spacing or margins")


def _clamp(v, lo, hi):
    return min(max(v, lo), hi)


# ---------------------------------------------------------------------------
# step
# ---------------------------------------------------------------------------
def step(state: SceneState, action: ActionVector, cfg: EnvConfig) -> SceneState:
    """Advance one tick. All inputs clamp; terminate returns the state unchanged
    (aside from the terminal flag)."""
    action = action.clipped()
    nxt = state.clone()

    if action.mode == MODE_TERMINATE:
        nxt.terminal = True
        return nxt
    if action.mode == MODE_BASE:
        # the tabletop has no mobile base; a base action is a legal no-op
        return nxt

    dx = float(action.arm[ARM_X]) * cfg.step_gain
    dy = float(action.arm[ARM_Y]) * cfg.step_gain
    gx, gy = nxt.gripper.position

    # drawer slides if the gripper starts the tick near its handle
    handle = drawer_handle_position(state, cfg)
    if math.dist((gx, gy), handle) <= cfg.handle_radius and cfg.drawer_travel > 0:
        nxt.drawer.openness = _clamp(
            nxt.drawer.openness + dy / cfg.drawer_travel * cfg.step_gain, 0.0, 1.0)

    new_pos = (_clamp(gx + dx, 0.0, 1.0), _clamp(gy + dy, 0.0, 1.0))
    nxt.gripper.position = new_pos
    if nxt.gripper.held is not None:
        nxt.object_by_id(nxt.gripper.held).position = new_pos

    width = float(action.arm[ARM_WIDTH])
    if width <= cfg.close_threshold and not nxt.gripper.closed:
        nxt.gripper.closed = True
        grabbed = _nearest_movable(nxt, new_pos, cfg.grasp_radius)
        if grabbed is not None:
            nxt.gripper.held = grabbed.id
            grabbed.position = new_pos
    elif width >= cfg.open_threshold and nxt.gripper.closed:
        nxt.gripper.closed = False
        nxt.gripper.held = None

    if abs(float(action.arm[ARM_ROLL])) >= cfg.roll_threshold and nxt.gripper.held:
        obj = nxt.object_by_id(nxt.gripper.held)
        obj.orientation = "sideways" if obj.orientation == "upright" else "upright"

    return nxt


def _nearest_movable(state: SceneState, pos, radius):
    best = None
    best_d = radius
    for obj in state.objects:
        if not obj.movable:
            continue
        d = math.dist(obj.position, pos)
        if d <= best_d:
            best, best_d = obj, d
    return best

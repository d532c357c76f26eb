from .render import render, render_gt_sketch
from .simulator import drawer_handle_position, reset, step
from .tasks import DRAWER_ID, SKILLS, TaskError, TaskSpec, default_task
from .types import (ACTION_DIM, MODE_ARM, MODE_BASE, MODE_TERMINATE,
                    ActionVector, DrawerState, GripperState, ObjectSpec,
                    SceneState, SimError, arm_action)

__all__ = [
    "ACTION_DIM", "DRAWER_ID", "MODE_ARM", "MODE_BASE", "MODE_TERMINATE",
    "SKILLS", "ActionVector", "DrawerState", "GripperState", "ObjectSpec",
    "SceneState", "SimError", "TaskError", "TaskSpec", "arm_action",
    "default_task", "drawer_handle_position", "render", "render_gt_sketch",
    "reset", "step",
]

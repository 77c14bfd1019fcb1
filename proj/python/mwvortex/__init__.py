"""Difference-frequency generation of vortex microwave fields in three-level atoms."""

from ._mwvortex import (
    BeamShape,
    ConfigError,
    Configuration,
    Convention,
    DegenerateField,
    Error,
    FieldMode,
    GateSettings,
    LevelScheme,
    ResonantDenominator,
    Role,
    SceneConfig,
    SingularSystem,
    StepTooLarge,
    TransverseMap,
    UnphysicalState,
    __version__,
    classify_hollow,
    closed_form,
    cnot_apply,
    efficiency,
    integrate,
    lg_amplitude,
    measure_topological_charge,
    petal_count,
    render_scene,
    ring_count,
    scenes,
    stark,
    steady_state,
    validate,
)

PLANE = float("inf")

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

from libkovalevskaya.fiber.level import FiberLevel, sampling_radius, level_residuals
from libkovalevskaya.fiber.sampling import FiberSample, UnboundedFiberError, sample_fiber
from libkovalevskaya.fiber.sampling import project_to_level, DEFAULT_BUDGET
from libkovalevskaya.fiber.components import FiberSummary, InconclusiveCountError
from libkovalevskaya.fiber.components import component_count, count_tori, label_components
from libkovalevskaya.fiber.components import level_of
from libkovalevskaya.fiber.flood_oracle import fiber_flood_oracle, fiber_bounds
from libkovalevskaya.fiber.isoenergy import CriticalLevel, isoenergy_critical_values

__all__ = [
    'FiberLevel',
    'sampling_radius',
    'level_residuals',
    'FiberSample',
    'UnboundedFiberError',
    'sample_fiber',
    'project_to_level',
    'DEFAULT_BUDGET',
    'FiberSummary',
    'InconclusiveCountError',
    'component_count',
    'count_tori',
    'label_components',
    'level_of',
    'fiber_flood_oracle',
    'fiber_bounds',
    'CriticalLevel',
    'isoenergy_critical_values',
]

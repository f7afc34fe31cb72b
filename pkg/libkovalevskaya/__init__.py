from libkovalevskaya.algebra_kind import AlgebraKind
from libkovalevskaya.phase_point import PhasePoint, PencilSpec, OrbitSpec, IntegralPair
from libkovalevskaya import math
from libkovalevskaya import fields
from libkovalevskaya.algebra import poisson_tensor, bracket, casimirs, sgrad, flow, Trajectory
from libkovalevskaya.algebra import jacobi_residual, random_points, IntegrationError
from libkovalevskaya.integrals import hamiltonian, integral_k, ks_hamiltonian, ks_general
from libkovalevskaya.integrals import ks_integral, sokolov_integral, involution_residual
from libkovalevskaya.chart import IntervalLabel, e3_to_so31, so31_to_e3, orbit_image
from libkovalevskaya.chart import interval_of_a, classify_orbit, RegionAtlas
from libkovalevskaya import fiber
from libkovalevskaya import bifurcation
from libkovalevskaya import molecule
from libkovalevskaya.config import RunConfig, resolve_config
from libkovalevskaya.visualize import diagram_figure, molecule_figure, write_svg

__all__ = [
    'AlgebraKind',
    'PhasePoint',
    'PencilSpec',
    'OrbitSpec',
    'IntegralPair',
    'math',
    'fields',
    'poisson_tensor',
    'bracket',
    'casimirs',
    'sgrad',
    'flow',
    'Trajectory',
    'jacobi_residual',
    'random_points',
    'IntegrationError',
    'hamiltonian',
    'integral_k',
    'ks_hamiltonian',
    'ks_general',
    'ks_integral',
    'sokolov_integral',
    'involution_residual',
    'IntervalLabel',
    'e3_to_so31',
    'so31_to_e3',
    'orbit_image',
    'interval_of_a',
    'classify_orbit',
    'RegionAtlas',
    'fiber',
    'bifurcation',
    'molecule',
    'RunConfig',
    'resolve_config',
    'diagram_figure',
    'molecule_figure',
    'write_svg',
]

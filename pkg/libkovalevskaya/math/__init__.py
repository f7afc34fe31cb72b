from libkovalevskaya.math.structure_constants import levi_civita
from libkovalevskaya.math.structure_constants import structure_constants
from libkovalevskaya.math.structure_constants import poisson_tensor_from_coords
from libkovalevskaya.math.structure_constants import jacobi_sum
from libkovalevskaya.math.gauss_newton import gauss_newton
from libkovalevskaya.math.gauss_newton import damped_least_squares_step
from libkovalevskaya.math.gauss_newton import clip_step
from libkovalevskaya.math.tangent import orbit_tangent_basis
from libkovalevskaya.math.tangent import sgrad_jacobian
from libkovalevskaya.math.finite_difference import finite_difference_gradient
from libkovalevskaya.math.finite_difference import finite_difference_bracket

__all__ = [
    'levi_civita',
    'structure_constants',
    'poisson_tensor_from_coords',
    'jacobi_sum',
    'gauss_newton',
    'damped_least_squares_step',
    'clip_step',
    'orbit_tangent_basis',
    'sgrad_jacobian',
    'finite_difference_gradient',
    'finite_difference_bracket',
]

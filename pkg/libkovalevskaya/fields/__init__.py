from libkovalevskaya.fields.base_field import ScalarField
from libkovalevskaya.fields.lambda_field import LambdaField, as_field
from libkovalevskaya.fields.coordinate_field import CoordinateField, coordinate_fields
from libkovalevskaya.fields.casimirs import CasimirF1, CasimirF2
from libkovalevskaya.fields.kovalevskaya import KovalevskayaHamiltonian
from libkovalevskaya.fields.kovalevskaya import KovalevskayaIntegral
from libkovalevskaya.fields.kovalevskaya_sokolov import KSHamiltonian
from libkovalevskaya.fields.kovalevskaya_sokolov import KSGeneralHamiltonian
from libkovalevskaya.fields.kovalevskaya_sokolov import KSIntegral
from libkovalevskaya.fields.kovalevskaya_sokolov import SokolovIntegral

__all__ = [
    'ScalarField',
    'LambdaField',
    'as_field',
    'CoordinateField',
    'coordinate_fields',
    'CasimirF1',
    'CasimirF2',
    'KovalevskayaHamiltonian',
    'KovalevskayaIntegral',
    'KSHamiltonian',
    'KSGeneralHamiltonian',
    'KSIntegral',
    'SokolovIntegral',
]

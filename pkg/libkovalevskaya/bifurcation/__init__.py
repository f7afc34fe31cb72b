from libkovalevskaya.bifurcation.equilibrium_type import EquilibriumType, Rank1Type
from libkovalevskaya.bifurcation.equilibrium_type import type_from_loop_molecule
from libkovalevskaya.bifurcation.rank import momentum_rank, RankDetails, RANK_THRESHOLD
from libkovalevskaya.bifurcation.families import EquilibriumFamily, equilibrium_families
from libkovalevskaya.bifurcation.equilibria import Equilibrium, find_equilibria
from libkovalevskaya.bifurcation.equilibria import classify_equilibrium, classify_rank1
from libkovalevskaya.bifurcation.census import SingularPointRecord, ArcRecord, CensusEntry
from libkovalevskaya.bifurcation.census import SINGULAR_POINTS, NEW_ARCS, OLD_POINT
from libkovalevskaya.bifurcation.census import equilibrium_census, census_signature
from libkovalevskaya.bifurcation.census import expected_counts
from libkovalevskaya.bifurcation.diagram import Window, Arc, Vertex, BifDiagram
from libkovalevskaya.bifurcation.atoms import AmbiguousAtomError, atom_from_counts, atom_of_arc
from libkovalevskaya.bifurcation.scan import UnresolvedCellError, scan_diagram, scan_column
from libkovalevskaya.bifurcation.loop import LoopMolecule, LoopRadiusError, loop_molecule

__all__ = [
    'EquilibriumType',
    'Rank1Type',
    'type_from_loop_molecule',
    'momentum_rank',
    'RankDetails',
    'RANK_THRESHOLD',
    'EquilibriumFamily',
    'equilibrium_families',
    'Equilibrium',
    'find_equilibria',
    'classify_equilibrium',
    'classify_rank1',
    'SingularPointRecord',
    'ArcRecord',
    'CensusEntry',
    'SINGULAR_POINTS',
    'NEW_ARCS',
    'OLD_POINT',
    'equilibrium_census',
    'census_signature',
    'expected_counts',
    'Window',
    'Arc',
    'Vertex',
    'BifDiagram',
    'AmbiguousAtomError',
    'atom_from_counts',
    'atom_of_arc',
    'UnresolvedCellError',
    'scan_diagram',
    'scan_column',
    'LoopMolecule',
    'LoopRadiusError',
    'loop_molecule',
]

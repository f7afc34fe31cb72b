"""
Command line front end: ``libkovalevskaya {verify,diagram,fiber,census,molecule}``.

Exit codes are 0 on success, 1 when a check fails or a count is inconclusive and 2 for usage,
configuration or molecule schema errors.
"""
import argparse
import collections
import csv
import logging
import os
import sys

import numpy as np

from libkovalevskaya.algebra import jacobi_residual, bracket, random_points
from libkovalevskaya.bifurcation import equilibrium_census, expected_counts, scan_diagram, \
    find_equilibria, Window, UnresolvedCellError, AmbiguousAtomError
from libkovalevskaya.chart import pushforward_residual, interval_of_a, SeparatingValueError
from libkovalevskaya.config import resolve_config, ConfigError
from libkovalevskaya.fiber import count_tori, fiber_flood_oracle, InconclusiveCountError, \
    UnboundedFiberError
from libkovalevskaya.fields import CasimirF1, CasimirF2, coordinate_fields
from libkovalevskaya.integrals import involution_residual, sokolov_identity_residual, \
    sokolov_integral
from libkovalevskaya.molecule import load_molecule, store_molecule, molecule_equiv, perturb_c2, \
    MoleculeSchemaError, PerturbationError, BUNDLES, bundle_names, read_bundled, format_r
from libkovalevskaya.visualize import diagram_figure, write_svg

logger = logging.getLogger('libkovalevskaya')

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

CSV_COLUMNS = ('interval', 'kind', 'arc_or_vertex_id', 'h', 'k', 'atom', 'count_above',
               'count_below')

VERIFY_TOLERANCES = collections.OrderedDict([
    ('jacobi', 1e-10),
    ('casimir_centrality', 1e-9),
    ('involution', 1e-8),
    ('chart_pushforward', 1e-8),
    ('sokolov_identity', 1e-8),
])

CheckResult = collections.namedtuple('CheckResult', ['name', 'residual', 'tolerance', 'passed'])


class UsageError(ValueError):
    pass


def run_checks(config, num_points=1000):
    """
    Identity suite of the configured pencil on seeded random points: Jacobi identity, centrality
    of the Casimirs, involution of ``H`` and ``K``, the chart being a Poisson map (so(3,1) only)
    and the Sokolov relation between the integrals.

    Returns:
        A list of ``CheckResult``; skipped checks have ``residual=None`` and pass
    """
    spec = config.spec
    points = random_points(num_points, config.seed)
    residuals = collections.OrderedDict()
    residuals['jacobi'] = float(np.max(jacobi_residual(points, spec)))
    residuals['casimir_centrality'] = max(
        float(np.max(np.abs(bracket(casimir, coordinate, points, spec))))
        for casimir in (CasimirF1(), CasimirF2()) for coordinate in coordinate_fields())
    residuals['involution'] = float(np.max(involution_residual(points, spec, config.k_spec)))
    residuals['chart_pushforward'] = None
    if spec.kappa < 0:
        residuals['chart_pushforward'] = float(np.max(
            pushforward_residual(points, 1.0, spec.kappa)))
    sokolov = spec._replace(kappa=0.0, c1=0.0, c2=spec.c2 or 1.0, c3=0.0)
    scale = 1.0 + np.abs(sokolov_integral(points, sokolov))
    residuals['sokolov_identity'] = float(np.max(
        sokolov_identity_residual(points, sokolov) / scale))

    results = []
    for name, tolerance in VERIFY_TOLERANCES.items():
        residual = residuals[name]
        results.append(CheckResult(name, residual, tolerance,
                                   residual is None or residual < tolerance))
    return results


def cmd_verify(config, args, out=sys.stdout):
    results = run_checks(config, num_points=args.num_points)
    out.write("{:<20} {:>12} {:>10}  {}\n".format('check', 'residual', 'tolerance', 'status'))
    for result in results:
        residual = 'skipped' if result.residual is None else '{:.3e}'.format(result.residual)
        out.write("{:<20} {:>12} {:>10.0e}  {}\n".format(
            result.name, residual, result.tolerance, 'pass' if result.passed else 'FAIL'))
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK_FAILED


def default_window(census, margin=0.25):
    """Window around the equilibrium images with a relative margin, clamped to ``k >= 0``."""
    if not census:
        raise UsageError("No equilibria on this orbit; pass --hmin/--hmax/--kmin/--kmax")
    images = np.array([entry.image for entry in census])
    h_lo, k_lo = images.min(axis=0)
    h_hi, k_hi = images.max(axis=0)
    pad_h = margin * (h_hi - h_lo) + 0.5
    pad_k = margin * (k_hi - k_lo) + 0.5
    return Window(h_lo - pad_h, h_hi + pad_h, max(k_lo - pad_k, 0.0), k_hi + pad_k)


def orbit_label(config):
    """Interval of the orbit on the axis ``b = 0``; the equilibrium search needs so(3,1)."""
    if config.kappa >= 0:
        raise UsageError("Equilibria and diagrams need kappa < 0, got {}".format(config.kappa))
    if config.b != 0:
        return 'b != 0'
    return interval_of_a(config.a, config.spec)


def write_diagram_csv(diagram, path, interval=''):
    """Writes the rows of a diagram, each tagged with the interval or region of its orbit."""
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.DictWriter(f, fieldnames=CSV_COLUMNS, lineterminator='\n')
        writer.writeheader()
        for row in diagram.to_rows():
            cells = {key: '{:.12g}'.format(value) if isinstance(value, float) else value
                     for key, value in row.items()}
            writer.writerow(dict(cells, interval=interval))
    return path


def cmd_diagram(config, args, out=sys.stdout):
    label = orbit_label(config)
    equilibria = find_equilibria(config.orbit, config.spec, seed=config.seed)
    window = config.window or default_window(
        equilibrium_census(config.orbit, config.spec, equilibria=equilibria))
    diagram = scan_diagram(
        config.orbit, config.spec, window, grid=config.grid, budget=config.budget,
        probe_budget=config.probe_budget, seed=config.seed, equilibria=equilibria)
    os.makedirs(config.out, exist_ok=True)
    stem = os.path.join(config.out, 'diagram_a{:g}_b{:g}'.format(config.a, config.b))
    write_diagram_csv(diagram, stem + '.csv', interval=label)
    write_svg(diagram_figure(diagram), stem + '.svg')
    out.write("{} ({})\n".format(diagram, label))
    out.write("wrote {0}.csv and {0}.svg\n".format(stem))
    return EXIT_OK


def cmd_fiber(config, args, out=sys.stdout):
    if args.k < 0:
        raise UsageError("K is nonnegative, got k={}".format(args.k))
    summary = count_tori(config.orbit, args.h, args.k, config.spec, budget=config.budget,
                         seed=config.seed)
    out.write("component_count {}\n".format(summary.component_count))
    out.write("residual_max {:.3e}\n".format(summary.residual_max))
    for point in summary.representatives:
        out.write("representative J={} x={}\n".format(
            np.array2string(np.asarray(point.J), precision=6),
            np.array2string(np.asarray(point.x), precision=6)))
    if args.oracle:
        oracle = fiber_flood_oracle(config.orbit, args.h, args.k, config.spec)
        out.write("flood_oracle {}\n".format(oracle))
        if oracle != summary.component_count:
            return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_census(config, args, out=sys.stdout):
    label = orbit_label(config)
    census = equilibrium_census(config.orbit, config.spec,
                                equilibria=find_equilibria(config.orbit, config.spec,
                                                           seed=config.seed))
    out.write("{:<6} {:<5} {:>12} {:>12} {:>3}  {}\n".format(
        'name', 'family', 'h', 'k', '#', 'types'))
    for entry in census:
        out.write("{:<6} {:<5} {:>12.6g} {:>12.6g} {:>3}  {}\n".format(
            entry.name or '-', entry.family or '-', entry.image[0], entry.image[1],
            entry.count, ', '.join(sorted(set(entry.types)))))
    if config.b != 0:
        return EXIT_OK
    expected = expected_counts(label)
    found = {entry.name: entry.count for entry in census}
    mismatches = {name: (count, found.get(name)) for name, count in expected.items()
                  if found.get(name) != count}
    for name, (count, got) in sorted(mismatches.items()):
        out.write("expected {} preimages of {}, found {}\n".format(count, name, got))
    return EXIT_CHECK_FAILED if mismatches else EXIT_OK


def read_molecule_source(source):
    """Text of a molecule file, or of a bundled class given as ``<bundle>/<name>``."""
    if os.path.exists(source):
        with open(source, encoding='utf-8') as f:
            return f.read()
    bundle, _, name = source.partition('/')
    if bundle in BUNDLES and name:
        try:
            return read_bundled(bundle, name)
        except KeyError as e:
            raise UsageError(str(e))
    raise UsageError("No molecule file {!r}".format(source))


def _describe(molecule, out):
    out.write("{}\n".format(molecule))
    for edge, (r, epsilon) in zip(molecule.edges, molecule.marks()):
        out.write("  {} -> {}: r={}, epsilon={:+d}\n".format(
            edge.source, edge.target, format_r(r), epsilon))
    for family in molecule.families():
        out.write("  family {}: n={}\n".format(', '.join(family.atom_ids), family.n))


def cmd_molecule(config, args, out=sys.stdout):
    if args.molecule_command == 'check':
        sources = args.files or ['{}/{}'.format(bundle, name) for bundle in BUNDLES
                                 for name in bundle_names(bundle)]
        failed = False
        for source in sources:
            try:
                load_molecule(read_molecule_source(source))
                out.write("{}: ok\n".format(source))
            except MoleculeSchemaError as e:
                out.write("{}: {}\n".format(source, e))
                failed = True
        return EXIT_USAGE if failed else EXIT_OK
    if args.molecule_command == 'equiv':
        first, second = (load_molecule(read_molecule_source(s)) for s in args.files)
        equivalent = molecule_equiv(first, second)
        out.write("{}\n".format(str(equivalent).lower()))
        return EXIT_OK
    if args.molecule_command == 'perturb':
        molecule = load_molecule(read_molecule_source(args.file))
        try:
            perturbed = perturb_c2(molecule, args.atom, name=args.name)
        except PerturbationError as e:
            raise UsageError(str(e))
        if args.output:
            with open(args.output, 'w', encoding='utf-8') as f:
                f.write(store_molecule(perturbed))
            _describe(perturbed, out)
        else:
            out.write(store_molecule(perturbed))
        return EXIT_OK
    raise UsageError("Unknown molecule command {!r}".format(args.molecule_command))


def _run_parameters():
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group('run configuration')
    for flag, kind, help_text in (
            ('--kappa', float, 'pencil parameter'),
            ('--c1', float, 'constant c1 of the Hamiltonian'),
            ('--c2', float, 'constant c2 of the Hamiltonian'),
            ('--c3', float, 'constant c3 of the Hamiltonian'),
            ('--a', float, 'value of the Casimir f1'),
            ('--b', float, 'value of the Casimir f2'),
            ('--hmin', float, 'left edge of the window'),
            ('--hmax', float, 'right edge of the window'),
            ('--kmin', float, 'lower edge of the window'),
            ('--kmax', float, 'upper edge of the window'),
            ('--grid', int, 'number of columns of the diagram scan'),
            ('--seed', int, 'seed of the random generators'),
            ('--out', str, 'output directory'),
            ('--budget', int, 'seeds per fiber count'),
            ('--probe-budget', int, 'seeds per critical value search'),
            ('--k-c1', float, 'c1 used for K only, to exercise the verifier')):
        group.add_argument(flag, type=kind, default=None, help=help_text)
    group.add_argument('--config', default=None, help='key=value file with run settings')
    return parser


def build_parser():
    parameters = _run_parameters()
    parser = argparse.ArgumentParser(
        prog='libkovalevskaya',
        description='Liouville foliation of the Kovalevskaya case on the pencil so(4), e(3), '
                    'so(3,1)')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for progress, -vv for debugging output')
    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify', parents=[parameters], help='run the identity suite')
    verify.add_argument('--num-points', type=int, default=1000)
    verify.set_defaults(handler=cmd_verify)

    diagram = commands.add_parser('diagram', parents=[parameters],
                                  help='reconstruct the bifurcation diagram (CSV and SVG)')
    diagram.set_defaults(handler=cmd_diagram)

    fiber = commands.add_parser('fiber', parents=[parameters], help='count tori of a fiber')
    fiber.add_argument('--h', type=float, required=True)
    fiber.add_argument('--k', type=float, required=True)
    fiber.add_argument('--oracle', action='store_true',
                       help='compare with the grid flood-fill count')
    fiber.set_defaults(handler=cmd_fiber)

    census = commands.add_parser('census', parents=[parameters],
                                 help='equilibria grouped by singular point')
    census.set_defaults(handler=cmd_census)

    molecule = commands.add_parser('molecule', help='marked molecule files')
    molecule_commands = molecule.add_subparsers(dest='molecule_command', required=True)
    check = molecule_commands.add_parser('check', help='validate molecule files')
    check.add_argument('files', nargs='*',
                       help='files or <bundle>/<name>; all bundled classes by default')
    equiv = molecule_commands.add_parser('equiv', help='test two molecules for equivalence')
    equiv.add_argument('files', nargs=2)
    perturb = molecule_commands.add_parser('perturb', help='split a C2 atom into B-B')
    perturb.add_argument('file')
    perturb.add_argument('--atom', required=True, help='id of the C2 atom')
    perturb.add_argument('--name', default=None)
    perturb.add_argument('--output', default=None)
    molecule.set_defaults(handler=cmd_molecule)
    return parser


def _flags(args):
    names = ('kappa', 'c1', 'c2', 'c3', 'a', 'b', 'grid', 'seed', 'out', 'budget',
             'probe_budget', 'k_c1')
    flags = {name: getattr(args, name, None) for name in names}
    for flag, key in (('hmin', 'h_min'), ('hmax', 'h_max'), ('kmin', 'k_min'),
                      ('kmax', 'k_max')):
        flags[key] = getattr(args, flag, None)
    return flags


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG if args.verbose > 1 else logging.INFO,
                            format='%(asctime)s %(name)s %(levelname)s %(message)s')
    try:
        config = resolve_config(_flags(args), getattr(args, 'config', None))
        return args.handler(config, args, out=out)
    except (UsageError, ConfigError, MoleculeSchemaError, SeparatingValueError) as e:
        sys.stderr.write("error: {}\n".format(e))
        return EXIT_USAGE
    except (InconclusiveCountError, UnboundedFiberError, UnresolvedCellError,
            AmbiguousAtomError) as e:
        sys.stderr.write("inconclusive: {}\n".format(e))
        return EXIT_CHECK_FAILED


if __name__ == '__main__':
    sys.exit(main())

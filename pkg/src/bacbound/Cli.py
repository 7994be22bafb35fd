import os
import sys
import argparse
from .Config import Config
from .Optimizer import OptimizerConfig
from .Bound import Bound, BoundCurve
from .Family import Family, SoftSauerParams, softSauerBound, exhaustivePairSearch, PairSearch
from .System import UnionFreeSystem
from .Verification import Suite, verifySystem, verifyPair
from .Loader import Loader
from .Reporter import Reporter
from .BacBoundError import BacBoundError

# python-call-graph is optional (profile extra)
try:
    import pycallgraph
except ImportError:
    hasPyCallGraph = False
else:
    hasPyCallGraph = True

class CliError(BacBoundError):
    """Cli Error."""

class Cli(object):
    """
    Runs bacbound commands through command-line.

    Exit codes: 0 on success, 1 when a verification check fails and 2 for
    usage and domain errors.
    """

    boundNames = ('simple', 'weldon', 'weldonNonsystematic', 'ul', 'main')
    defaultCurveFrom = 0.9
    defaultCurveTo = 1.0
    defaultCurveSteps = 101

    def __init__(self):
        """
        Create a cli object.
        """
        self.__parser = argparse.ArgumentParser(
            prog='bacbound',
            description='Upper bounds on the zero-error capacity of the binary adder channel'
        )

        self.__parser.add_argument(
            '--config',
            metavar='FILE',
            help='settings file (json or yaml) with the sections "optimizer" and "verify".'
        )

        self.__parser.add_argument(
            '--profile',
            metavar='PNG',
            help='write a call graph of the command to the file (requires pycallgraph).'
        )

        self.__parser.add_argument(
            '--grid-points',
            type=int,
            help='number of points of the dense grid used by the optimizer.'
        )

        self.__parser.add_argument(
            '--refine-iters',
            type=int,
            help='maximum number of golden-section iterations.'
        )

        self.__parser.add_argument(
            '--tol',
            type=float,
            help='golden-section bracket width.'
        )

        self.__parser.add_argument(
            '--outer-grid-points',
            type=int,
            help='number of grid points of outer minimizations.'
        )

        self.__parser.add_argument(
            '--json',
            action='store_true',
            help='machine readable output.'
        )

        subparsers = self.__parser.add_subparsers(dest='command', metavar='COMMAND')
        subparsers.required = True

        # bound
        parser = subparsers.add_parser('bound', help='upper bound on R2 for a given R1.')
        parser.add_argument('--r1', type=float, required=True)
        parser.add_argument(
            '--which',
            choices=self.boundNames + ('all',),
            default='all'
        )

        # curve
        parser = subparsers.add_parser('curve', help='csv of the simple, ul and main bounds.')
        parser.add_argument('--from', dest='r1From', type=float, default=self.defaultCurveFrom)
        parser.add_argument('--to', dest='r1To', type=float, default=self.defaultCurveTo)
        parser.add_argument('--steps', type=int, default=self.defaultCurveSteps)
        parser.add_argument('--out', metavar='FILE', help='csv file path, stdout otherwise.')

        # sauer
        parser = subparsers.add_parser('sauer', help='soft Sauer-Perles-Shelah bound.')
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--d', type=int, required=True)
        parser.add_argument('--k', type=int, required=True)

        # verify
        parser = subparsers.add_parser('verify', help='run verification suites.')
        parser.add_argument('--suite', choices=Suite.registeredNames() + ['all'])
        parser.add_argument('--seed', type=int)
        parser.add_argument('--quick', action='store_true', help='reduce the random sample counts.')
        parser.add_argument('--system', metavar='FILE', help='union-free system json file.')
        parser.add_argument('--pair', nargs=2, metavar=('F1', 'F2'), help='family text files.')

        # search
        parser = subparsers.add_parser('search', help='exhaustive union-free pair search.')
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--budget', type=float, default=PairSearch.defaultBudget)

        # system
        parser = subparsers.add_parser('system', help='union-free system constructions.')
        parser.add_argument('--log3', action='store_true', required=True)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--out', metavar='FILE', help='write the system json to the file.')

        # config
        parser = subparsers.add_parser('config', help='show or edit the persisted optimizer defaults.')
        parser.add_argument(
            '--set',
            nargs=2,
            action='append',
            default=[],
            metavar=('KEY', 'VALUE'),
            help='persist an optimizer setting (gridPoints, refineIters, tol or outerGridPoints).'
        )
        parser.add_argument('--unset', action='append', default=[], metavar='KEY')
        parser.add_argument('--clear', action='store_true', help='remove every persisted setting.')

        self.__commands = {
            'bound': self.__bound,
            'curve': self.__curve,
            'sauer': self.__sauer,
            'verify': self.__verify,
            'search': self.__search,
            'system': self.__system,
            'config': self.__config
        }

    def run(self, args, outStream=sys.stdout, errStream=sys.stderr):
        """
        Execute the command and return the exit code.
        """
        try:
            parseArgs = self.__parser.parse_args(args)
        except SystemExit as err:
            return 0 if err.code is None else int(err.code)

        try:
            settings = self.__settings(parseArgs)
            optimizerConfig = None
            if parseArgs.command != 'config':
                optimizerConfig = self.__optimizerConfig(parseArgs, settings)

            reporter = Reporter.create(
                'json' if parseArgs.json else Reporter.defaultName(),
                parseArgs.command
            )

            command = self.__commands[parseArgs.command]
            callArgs = (parseArgs, settings, optimizerConfig, reporter, outStream)
            if parseArgs.profile:
                return self.__profile(parseArgs.profile, command, callArgs, outStream, errStream)

            return command(*callArgs)

        except BacBoundError as err:
            errStream.write('bacbound error: {}\n'.format(err))
            errStream.flush()
            return 2

    def __bound(self, parseArgs, settings, optimizerConfig, reporter, outStream):
        """
        Report the bounds on R2 for the input R1.
        """
        names = self.boundNames if parseArgs.which == 'all' else (parseArgs.which,)
        for name in names:
            bound = Bound.create(name, optimizerConfig)
            reporter.addRow({
                'bound': name,
                'r1': float(parseArgs.r1),
                'r2': bound.value(parseArgs.r1),
                'tol': optimizerConfig.tol()
            })

        reporter.display(outStream)
        return 0

    def __curve(self, parseArgs, settings, optimizerConfig, reporter, outStream):
        """
        Write the bound curve as csv.
        """
        curve = BoundCurve.compute(
            parseArgs.r1From,
            parseArgs.r1To,
            parseArgs.steps,
            optimizerConfig
        )

        if parseArgs.out is None:
            outStream.write(curve.toCsv())
            return 0

        self.__writeFile(parseArgs.out, curve.toCsv())

        outStream.write('Curve has been saved to: {}\n'.format(parseArgs.out))
        return 0

    def __sauer(self, parseArgs, settings, optimizerConfig, reporter, outStream):
        """
        Report the soft Sauer-Perles-Shelah bound.
        """
        params = SoftSauerParams(parseArgs.n, parseArgs.d, parseArgs.k)
        value = softSauerBound(params)

        reporter.addRow({
            'n': params.n(),
            'd': params.d(),
            'k': params.k(),
            'threshold': params.threshold(),
            'bound': value,
            'approximation': float(value)
        })
        reporter.display(outStream)
        return 0

    def __verify(self, parseArgs, settings, optimizerConfig, reporter, outStream):
        """
        Run the verification suites (or the object checks) and report every check.
        """
        results = []
        if parseArgs.system:
            with open(self.__checkFile(parseArgs.system)) as f:
                results.extend(verifySystem(UnionFreeSystem.fromJson(f.read())))

        if parseArgs.pair:
            families = []
            for filePath in parseArgs.pair:
                with open(self.__checkFile(filePath)) as f:
                    families.append(Family.fromText(f.read()))
            results.extend(verifyPair(*families))

        suite = parseArgs.suite
        if suite is None and not results:
            suite = 'all'

        if suite is not None:
            verifySettings = settings['verify']
            seed = parseArgs.seed if parseArgs.seed is not None else verifySettings.get('seed', 0)
            scale = float(verifySettings.get('scale', 1.0))
            if parseArgs.quick:
                scale *= Suite.quickScale

            names = Suite.registeredNames() if suite == 'all' else [suite]
            for name in names:
                results.extend(
                    Suite.create(name, seed=seed, scale=scale, config=optimizerConfig).run()
                )

        for result in results:
            reporter.addRow(result.toDict())
        reporter.display(outStream)

        return 0 if all(result.passed() for result in results) else 1

    def __search(self, parseArgs, settings, optimizerConfig, reporter, outStream):
        """
        Report the best union-free pair found by the exhaustive search.
        """
        result = exhaustivePairSearch(parseArgs.n, parseArgs.budget)
        row = {
            'n': result.f1().n(),
            'f1Size': result.f1().size(),
            'f2Size': result.f2().size(),
            'product': result.product(),
            'exact': result.exact()
        }

        if parseArgs.json:
            row['f1'] = result.f1().toText()
            row['f2'] = result.f2().toText()
            reporter.addRow(row)
            reporter.display(outStream)
            return 0

        reporter.addRow(row)
        reporter.display(outStream)
        for label, family in (('f1', result.f1()), ('f2', result.f2())):
            outStream.write('# {}\n{}'.format(label, family.toText()))

        return 0

    def __system(self, parseArgs, settings, optimizerConfig, reporter, outStream):
        """
        Report the rates and validity of the log 3 construction.
        """
        system = UnionFreeSystem.log3Construction(parseArgs.n)
        rates = system.rates()

        reporter.addRow({
            'n': system.n(),
            'm0': system.m0(),
            'm1': system.m1(),
            'm2': system.m2(),
            'r0': rates.r0(),
            'r1': rates.r1(),
            'r2': rates.r2(),
            'sum': rates.sum(),
            'valid': system.isValid()
        })

        if parseArgs.out:
            self.__writeFile(parseArgs.out, system.toJson())

        reporter.display(outStream)

        return 0

    def __config(self, parseArgs, settings, optimizerConfig, reporter, outStream):
        """
        Edit the persisted optimizer defaults and report the resulting settings.

        The edit is validated as a whole before anything is written.
        """
        config = Config('optimizer')
        defaults = OptimizerConfig().toDict()
        for key in [key for key, _ in parseArgs.set] + parseArgs.unset:
            if key not in defaults:
                raise CliError(
                    'Invalid optimizer setting name "{}", expected one of: {}'.format(
                        key,
                        ', '.join(sorted(defaults))
                    )
                )

        stored = {} if parseArgs.clear else config.toDict()
        data = {key: value for key, value in stored.items() if key not in parseArgs.unset}
        data.update(dict(parseArgs.set))
        resolved = OptimizerConfig.fromDict(data).toDict()

        if parseArgs.clear:
            config.clear()

        if parseArgs.set or parseArgs.unset:
            config.update(
                {key: resolved[key] for key, _ in parseArgs.set},
                removeKeys=[key for key in parseArgs.unset if config.hasKey(key)]
            )

        for key in sorted(defaults):
            reporter.addRow({
                'setting': key,
                'value': resolved[key],
                'source': 'user' if config.hasKey(key) else 'default'
            })
        reporter.display(outStream)

        return 0

    def __profile(self, filePath, command, callArgs, outStream, errStream):
        """
        Run the command under the call graph profiler.
        """
        if not hasPyCallGraph:
            errStream.write(
                'Error, unable to profile execution. The "pycallgraph" dependency is missing!\n'
            )
            errStream.flush()
            return command(*callArgs)

        graphviz = pycallgraph.output.GraphvizOutput()
        graphviz.output_file = filePath
        with pycallgraph.PyCallGraph(output=graphviz):
            exitCode = command(*callArgs)

        errStream.write(
            'Execution profile has been saved to: {}\n'.format(graphviz.output_file)
        )
        errStream.flush()
        return exitCode

    @classmethod
    def __settings(cls, parseArgs):
        """
        Return the settings sections loaded from the --config file (empty otherwise).
        """
        if not parseArgs.config:
            return {section: {} for section in Loader.sections}

        loader = Loader.createFromPath(parseArgs.config)
        return loader.loadFromFile(parseArgs.config)

    @classmethod
    def __optimizerConfig(cls, parseArgs, settings):
        """
        Return the optimizer config resolved from the user config, the settings file and the flags.
        """
        optimizerConfig = OptimizerConfig.fromConfig(Config('optimizer'))
        optimizerConfig = OptimizerConfig.fromDict(settings['optimizer'], base=optimizerConfig)

        return optimizerConfig.updated(
            gridPoints=parseArgs.grid_points,
            refineIters=parseArgs.refine_iters,
            tol=parseArgs.tol,
            outerGridPoints=parseArgs.outer_grid_points
        )

    @classmethod
    def __writeFile(cls, filePath, contents):
        """
        Write the contents to the file path raising CliError when it cannot be written.
        """
        try:
            with open(filePath, 'w') as f:
                f.write(contents)
        except OSError as err:
            raise CliError(
                'Unable to write "{}": {}'.format(filePath, err.strerror or err)
            )

    @classmethod
    def __checkFile(cls, filePath):
        """
        Return the file path raising CliError when it does not exist.
        """
        if not os.path.isfile(filePath):
            raise CliError(
                'Invalid file "{}"'.format(filePath)
            )

        return filePath

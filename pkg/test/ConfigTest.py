import io
import os
import json
import unittest
from .BaseTestCase import BaseTestCase
from bacbound import Config, ConfigKeyError, ConfigInvalidFileError
from bacbound.Cli import Cli
from bacbound.Optimizer import OptimizerConfig

class ConfigTest(BaseTestCase):
    """Test for the persisted user config."""

    @classmethod
    def __run(cls, *args):
        """
        Return the exit code and the parsed json rows (None on errors or without --json).
        """
        outStream = io.StringIO()
        exitCode = Cli().run(list(args), outStream=outStream, errStream=io.StringIO())
        if exitCode != 0 or '--json' not in args:
            return exitCode, None

        return exitCode, json.loads(outStream.getvalue())['rows']

    def tearDown(self):
        Config('optimizer').clear()

    def testValues(self):
        """
        Test setting, reading and removing values.
        """
        config = Config('values')
        config.clear()
        config.setValue('seed', 3)
        config.update({'scale': 0.5, 'name': 'quick'})

        self.assertTrue(config.hasKey('seed'))
        self.assertEqual(config.keys(), ['name', 'scale', 'seed'])
        self.assertEqual(Config('values').value('scale'), 0.5)
        self.assertEqual(config.value('missing', None), None)
        self.assertRaises(ConfigKeyError, config.value, 'missing')
        self.assertTrue(str(config.filePath()).startswith(self.tempDirectory()))

        config.update(removeKeys=['name'])
        self.assertEqual(Config('values').toDict(), {'scale': 0.5, 'seed': 3})
        self.assertRaises(ConfigKeyError, config.update, removeKeys=['name'])

    def testInvalidFile(self):
        """
        Test that a config file that is not a json object is rejected.
        """
        filePath = Config('broken').filePath()
        with open(filePath, 'w') as f:
            f.write('[1, 2')
        self.assertRaises(ConfigInvalidFileError, Config, 'broken')

        with open(filePath, 'w') as f:
            f.write('[1, 2]')
        self.assertRaises(ConfigInvalidFileError, Config, 'broken')
        os.remove(filePath)

    def testOptimizerDefaults(self):
        """
        Test that persisted optimizer settings are used by the cli.
        """
        config = Config('optimizer')
        config.update({'gridPoints': 256, 'outerGridPoints': 32})
        self.assertEqual(
            OptimizerConfig.fromConfig(Config('optimizer')),
            OptimizerConfig(gridPoints=256, outerGridPoints=32)
        )

        exitCode, rows = self.__run('--json', 'bound', '--which', 'simple', '--r1', '0.5')
        self.assertEqual(exitCode, 0)
        self.assertEqual(rows[0]['r2'], 1.0)

        config.setValue('gridPoints', 8)
        exitCode, _ = self.__run('bound', '--which', 'simple', '--r1', '0.5')
        self.assertEqual(exitCode, 2)

    def testConfigCommand(self):
        """
        Test editing the persisted optimizer defaults through the cli.
        """
        exitCode, rows = self.__run('--json', 'config', '--set', 'gridPoints', '256', '--set', 'tol', '1e-6')
        self.assertEqual(exitCode, 0)

        settings = {row['setting']: row for row in rows}
        self.assertEqual(sorted(settings), ['gridPoints', 'outerGridPoints', 'refineIters', 'tol'])
        self.assertEqual(settings['gridPoints']['value'], 256)
        self.assertEqual(settings['gridPoints']['source'], 'user')
        self.assertEqual(settings['refineIters']['value'], OptimizerConfig.defaultRefineIters)
        self.assertEqual(settings['refineIters']['source'], 'default')

        self.assertEqual(Config('optimizer').toDict(), {'gridPoints': 256, 'tol': 1e-6})
        self.assertEqual(
            OptimizerConfig.fromConfig(Config('optimizer')),
            OptimizerConfig(gridPoints=256, tol=1e-6)
        )

        exitCode, rows = self.__run('--json', 'config', '--unset', 'tol')
        self.assertEqual(exitCode, 0)
        self.assertEqual(Config('optimizer').toDict(), {'gridPoints': 256})

        exitCode, rows = self.__run('--json', 'config', '--clear')
        self.assertEqual(exitCode, 0)
        self.assertTrue(all(row['source'] == 'default' for row in rows))
        self.assertEqual(Config('optimizer').toDict(), {})

    def testConfigCommandValidation(self):
        """
        Test that invalid edits are rejected without touching the persisted values.
        """
        Config('optimizer').setValue('gridPoints', 256)

        for args in (
                ['--set', 'gridPoints', '8'],
                ['--set', 'tol', 'small'],
                ['--set', 'seed', '3'],
                ['--unset', 'seed'],
                ['--clear', '--set', 'gridPoints', '8']):
            exitCode, _ = self.__run('config', *args)
            self.assertEqual(exitCode, 2)
            self.assertEqual(Config('optimizer').toDict(), {'gridPoints': 256})

    def testConfigCommandRecovers(self):
        """
        Test that the config command can repair invalid persisted values.
        """
        Config('optimizer').setValue('gridPoints', 8)

        exitCode, _ = self.__run('bound', '--which', 'simple', '--r1', '0.5')
        self.assertEqual(exitCode, 2)

        exitCode, _ = self.__run('config', '--unset', 'gridPoints')
        self.assertEqual(exitCode, 0)

        exitCode, _ = self.__run('bound', '--which', 'simple', '--r1', '0.5')
        self.assertEqual(exitCode, 0)


if __name__ == "__main__":
    unittest.main()

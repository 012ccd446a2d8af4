"""Command-line test cases. Each test runs main() in-process with
captured standard streams and a scratch directory.
"""


import unittest
import sys
import os
import io
import tempfile
from contextlib import redirect_stdout, redirect_stderr
from unittest import mock

# Run tests using local copy of library - comment this out if unnecessary
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from homcode import cli
from homcode.constants import budget
from homcode.css import build_css, make_report
from homcode.gf2 import read_spm
from homcode.polygonal_map import read_map
from catalog_test import catalog_test, TETRAHEDRON


class cli_test(catalog_test):
    def setUp(self):
        """Called at the start of each test.
        """
        self._folder = tempfile.TemporaryDirectory()
        self._subsets = budget.SUBSETS

    def tearDown(self):
        """Called at the end of each test.
        """
        self._folder.cleanup()
        budget.SUBSETS = self._subsets

    def _path(self, name):
        return os.path.join(self._folder.name, name)

    def _run(self, *argv):
        """Run the command line.

        Returns:
            (int, str, str): Exit code, standard output, standard error.
        """
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = cli.main([str(arg) for arg in argv])
        return code, out.getvalue(), err.getvalue()

    def _builtin(self, name):
        path = self._path(f'{name}.map')
        status, _, _ = self._run('builtin', name, '-o', path)
        self.assertEqual(0, status)
        return path


class gen_test(cli_test):
    def test_odd(self):
        """Test generating the odd map at (3, 0).
        """
        path = self._path('odd.map')
        status, out, _ = self._run('gen', 'odd', 3, 0, '-o', path)
        self.assertEqual(0, status)
        self.assertEqual('V=16 E=40 F=16 chi=-8 type=[5^5]', out.strip())
        with open(path, encoding='utf-8') as f:
            lines = f.read().splitlines()
        self.assertEqual('# odd m1=3 m2=0', lines[0])
        self.assertEqual(16, len(lines) - 1)
        self.assertTrue(all(len(line.split()) == 5 for line in lines[1:]))

    def test_even(self):
        """Test generating the even map at (3, 0).
        """
        status, out, _ = self._run('gen', 'even', 3, 0,
                                   '-o', self._path('even.map'))
        self.assertEqual(0, status)
        self.assertEqual('V=26 E=78 F=26 chi=-26 type=[6^6]', out.strip())

    def test_degenerate(self):
        """Test that m1 = 2 is refused with exit code 2.
        """
        status, _, err = self._run('gen', 'odd', 2, 0,
                                   '-o', self._path('bad.map'))
        self.assertEqual(2, status)
        self.assertIn('m1 must be ≥ 3', err)
        self.assertFalse(os.path.exists(self._path('bad.map')))

    def test_gen_then_code(self):
        """Test that the command line reproduces the in-process report.
        """
        path = self._path('odd.map')
        self._run('gen', 'odd', 3, 0, '-o', path)
        status, out, _ = self._run('code', path)
        self.assertEqual(0, status)
        m = read_map(path)
        expected = make_report(m, build_css(m), 'odd.map', d=4)
        self.assertEqual(str(expected), out.splitlines()[0])
        self.assertTrue(out.startswith('[[40,10,4]] chi=-8 type=[5^5] '
                                       'rate=1/4'))


class code_command_test(cli_test):
    def test_n1(self):
        """Test the N1 report with the default distance.
        """
        status, out, _ = self._run('code', self._builtin('n1'),
                                   '--distance', 'bfs')
        self.assertEqual(0, status)
        self.assertTrue(out.startswith('[[42,4,3]] chi=-2 type=[3^7] '))
        self.assertIn('catalog=[[42,4,3]]', out)

    def test_k3_oracle(self):
        """Test the K3 report by enumeration.
        """
        status, out, _ = self._run('code', self._builtin('k3'),
                                   '--distance', 'oracle')
        self.assertEqual(0, status)
        self.assertTrue(out.startswith('[[40,3,4]] chi=-1 type=[4^3,5^1] '))

    def test_sphere(self):
        """Test that k = 0 prints no distance.
        """
        path = self._path('tetra.map')
        with open(path, 'w', encoding='utf-8') as f:
            f.write('\n'.join(' '.join(map(str, face))
                              for face in TETRAHEDRON))
        status, out, err = self._run('code', path)
        self.assertEqual(0, status)
        self.assertTrue(out.startswith('[[6,0,?]] chi=2 '))
        self.assertIn('k=0', err)

    def test_exports(self):
        """Test .spm exports and the witness.
        """
        hx, hz = self._path('hx.spm'), self._path('hz.spm')
        status, out, _ = self._run('code', self._builtin('n1'), '--hx', hx,
                                   '--hz', hz, '--witness')
        self.assertEqual(0, status)
        self.assertEqual((12, 42), read_spm(hx).shape)
        self.assertEqual((28, 42), read_spm(hz).shape)
        self.assertIn(' witness=', out)

    def test_budget_environment(self):
        """Test that HOMCODE_BUDGET limits the enumeration.
        """
        path = self._builtin('k3')
        with mock.patch.dict(os.environ, {'HOMCODE_BUDGET': '100'}):
            status, _, err = self._run('code', path, '--distance', 'oracle')
        self.assertEqual(3, status)
        self.assertIn('budget', err)

    def test_small_budget_skips_enumeration_check(self):
        """Test that a budget too small for the enumeration check leaves the
        breadth-first result in place.
        """
        path = self._builtin('k3')
        with mock.patch.dict(os.environ, {'HOMCODE_BUDGET': '100'}):
            status, out, _ = self._run('code', path)
        self.assertEqual(0, status)
        self.assertTrue(out.startswith('[[40,3,4]] chi=-1 '))

    def test_bad_budget(self):
        """Test a malformed budget.
        """
        path = self._builtin('n1')
        with mock.patch.dict(os.environ, {'HOMCODE_BUDGET': 'many'}):
            status, _, err = self._run('code', path)
        self.assertEqual(2, status)
        self.assertIn('HOMCODE_BUDGET', err)

    def test_invalid_map(self):
        """Test a map file that is not closed.
        """
        path = self._path('open.map')
        with open(path, 'w', encoding='utf-8') as f:
            f.write('1 2 3\n1 3 4\n')
        status, _, err = self._run('code', path)
        self.assertEqual(2, status)
        self.assertIn('expected 2', err)

    def test_missing_file(self):
        """Test that an unreadable file exits with code 1.
        """
        status, _, _ = self._run('code', self._path('none.map'))
        self.assertEqual(1, status)


class info_test(cli_test):
    def test_k3(self):
        """Test the K3 description.
        """
        status, out, _ = self._run('info', self._builtin('k3'))
        self.assertEqual(0, status)
        lines = out.splitlines()
        self.assertEqual('V=20 E=40 F=19 chi=-1 type=[4^3,5^1]', lines[0])
        self.assertEqual('orientable=no', lines[1])
        self.assertIn('catalog=[[40,3,4]]', lines[2])

    def test_unknown_builtin(self):
        """Test an unknown built-in name.
        """
        status, _, err = self._run('builtin', 'k7', '-o', self._path('x.map'))
        self.assertEqual(2, status)
        self.assertIn('k7', err)


class cover_command_test(cli_test):
    def test_n1(self):
        """Test the two-sheeted cover of N1.
        """
        out_path = self._path('n1x2.map')
        status, out, _ = self._run('cover', self._builtin('n1'), 2,
                                   '-o', out_path)
        self.assertEqual(0, status)
        lines = out.splitlines()
        self.assertRegex(lines[0], r'^cycle=C\(\d+,\d+,\d+\)$')
        self.assertEqual('V=24 E=84 F=56 chi=-4 type=[3^7]', lines[1])
        status, out, _ = self._run('code', out_path, '--distance', 'none')
        self.assertTrue(out.startswith('[[84,6,?]]'))

    def test_k3_code(self):
        """Test the code of the two-sheeted cover of K3.
        """
        out_path = self._path('k3x2.map')
        self._run('cover', self._builtin('k3'), 2, '-o', out_path)
        status, out, _ = self._run('code', out_path)
        self.assertEqual(0, status)
        self.assertTrue(out.startswith('[[80,4,4]]'))

    def test_explicit_cycle(self):
        """Test that a user-given gluing cycle reproduces the searched one.
        """
        path = self._builtin('k3')
        _, found, _ = self._run('cover', path, 2, '-o', self._path('a.map'))
        labels = found.splitlines()[0][len('cycle=C('):-1]
        status, out, _ = self._run('cover', path, 2, '--cycle', labels,
                                   '-o', self._path('b.map'))
        self.assertEqual(0, status)
        self.assertEqual(found, out)

    def test_bad_cycle(self):
        """Test a gluing cycle through a missing edge.
        """
        status, _, err = self._run('cover', self._builtin('n1'), 2,
                                   '--cycle', '1,2,12',
                                   '-o', self._path('c.map'))
        self.assertEqual(2, status)
        self.assertIn('no edge', err)

    def test_sphere(self):
        """Test that the sphere has no cover.
        """
        path = self._path('tetra.map')
        with open(path, 'w', encoding='utf-8') as f:
            f.write('\n'.join(' '.join(map(str, face))
                              for face in TETRAHEDRON))
        status, _, err = self._run('cover', path, 2, '-o', self._path('t.map'))
        self.assertEqual(2, status)
        self.assertIn('chi=2', err)


class table_command_test(cli_test):
    def test_covers(self):
        """Test the cover table at d = 1 without distances.
        """
        status, out, _ = self._run('table', 't3-covers', '--d-max', 1,
                                   '--no-distance')
        self.assertEqual(0, status)
        self.assertIn('2/21', out)
        self.assertIn('3/40', out)
        self.assertNotIn('MISMATCH', out)

    def test_families(self):
        """Test a small family table.
        """
        status, out, _ = self._run('table', 't2-families', '--m1-max', 3,
                                   '--m2-max', 1, '--no-distance')
        self.assertEqual(0, status)
        self.assertEqual(5, len(out.splitlines()))

    def test_catalog(self):
        """Test the catalog table.
        """
        status, out, _ = self._run('table', 't1-k3')
        self.assertEqual(0, status)
        self.assertIn('[[40,3,4]]', out)
        self.assertIn('[[42,4,3]]', out)


if __name__ == '__main__':
    unittest.main()

"""
Tests the auxilliary functions.
"""

import json

import numpy as np

from pyagree.utils import unique_rows, quantize, as_axes, format_float, write_csv, write_json

class TestUniqueRows(object):
    A = np.array([[1, 0], [0, 2], [1, 0], [0, 1]])

    def test_rows(self):
        B, J = unique_rows(self.A, return_inverse=True)

        assert B.tolist() == [[0, 1], [0, 2], [1, 0]]
        assert np.array_equal(self.A, B[J])
        assert J.ndim == 1

    def test_rows_only(self):
        assert unique_rows(self.A).tolist() == [[0, 1], [0, 2], [1, 0]]

class TestFormatting(object):
    def test_quantize(self):
        assert quantize([0.1 + 1e-15, -0.])[0] == quantize([0.1])[0]
        assert str(quantize([-0.])[0]) == '0.0'

    def test_as_axes(self):
        assert as_axes(1) == (1,)
        assert as_axes('W') == ('W',)
        assert as_axes([0, 2]) == (0, 2)

    def test_format_float(self):
        assert format_float(1.) == '1'
        assert format_float(0.1) == '0.1'
        assert format_float(1. / 3.) == '0.333333333333333'

class TestWriters(object):
    def test_csv(self, tmp_path):
        path = str(tmp_path / 'rows.csv')
        write_csv(path, ('a', 'b'), [[1, 'x'], [2, 'y']])

        with open(path, 'rb') as f:
            assert f.read() == b'a,b\n1,x\n2,y\n'

    def test_json(self, tmp_path):
        path = str(tmp_path / 'data.json')
        write_json(path, {'b': 1, 'a': [1, 2]})

        with open(path, 'r') as f:
            text = f.read()

        assert text.endswith('\n')
        assert text.index('"a"') < text.index('"b"')
        assert json.loads(text) == {'a': [1, 2], 'b': 1}

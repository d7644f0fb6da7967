"""
Tests the trace writers.
"""

import csv
import json

from pyagree.protocol.engine import run_protocol
from pyagree.protocol.rules import standard_rule
from pyagree.protocol.export import TRACE_COLUMNS, trace_rows, write_trace_csv, write_trace_json
from pyagree.scenarios import make_xor, coins_substitutes

trace = run_protocol(make_xor(), standard_rule(), (0, 1), scenario={'name': 'xor'})

class TestTraceRows(object):
    def test_rows(self):
        rows = trace_rows(trace)

        assert len(rows) == 2
        assert all(len(row) == len(TRACE_COLUMNS) for row in rows)

        row = dict(zip(TRACE_COLUMNS, rows[0]))
        assert row['round'] == 1
        assert row['agent'] == 0
        assert row['message'] == 'belief:0.5;0.5'
        assert row['q'] == '0.5;0.5'
        assert row['consistency_size'] == 4

class TestWriters(object):
    def test_csv(self, tmp_path):
        path = str(tmp_path / 'trace.csv')
        write_trace_csv(trace, path)

        with open(path, 'rb') as f:
            content = f.read()
        assert b'\r\n' not in content

        with open(path, 'r', newline='') as f:
            rows = list(csv.reader(f))

        assert tuple(rows[0]) == TRACE_COLUMNS
        assert len(rows) == 3

    def test_json(self, tmp_path):
        path = str(tmp_path / 'trace.json')
        write_trace_json(trace, path)

        with open(path, 'r') as f:
            data = json.load(f)

        assert data['consensus_round'] == 1
        assert data['scenario'] == {'name': 'xor'}
        assert len(data['steps']) == 2

    def test_deterministic(self, tmp_path):
        table = coins_substitutes(3, accuracies=[0.6, 0.7, 0.8])
        contents = []

        for name in ('a.csv', 'b.csv'):
            path = str(tmp_path / name)
            write_trace_csv(run_protocol(table, standard_rule(), (1, 0, 1)), path)
            with open(path, 'rb') as f:
                contents.append(f.read())

        assert contents[0] == contents[1]

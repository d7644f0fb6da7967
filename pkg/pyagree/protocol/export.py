"""
Provides the writers of protocol traces.

The CSV output has one row per announcement with the columns

    round, agent, message, q, p, declaration_mi, residual_mi,
    aggregated_mi, loss, realized_declaration_mi, realized_residual_mi,
    consistency_size

where `q` and `p` are the outsider and agent beliefs with their
coordinates separated by `;`, the information columns are in bits and
refer to the history averaged values. Floats use the `.15g` format and
lines end with `\\n`, independently of the platform and locale.
"""

# IMPORTS
from ..utils import format_float, write_csv, write_json

TRACE_COLUMNS = ('round', 'agent', 'message', 'q', 'p',
                 'declaration_mi', 'residual_mi', 'aggregated_mi', 'loss',
                 'realized_declaration_mi', 'realized_residual_mi', 'consistency_size')

def _vector(belief):
    return ';'.join(format_float(x) for x in belief)

def trace_rows(trace):
    """
    Returns the CSV rows of a trace (without the header).
    """
    rows = []

    for step in trace.steps:
        rows.append([step.round,
                     step.agent,
                     step.message.label(),
                     _vector(step.outsider_belief),
                     _vector(step.agent_belief),
                     format_float(step.declaration_info),
                     format_float(step.residual_info),
                     format_float(step.aggregated_info),
                     format_float(step.loss),
                     format_float(step.realized_declaration_info),
                     format_float(step.realized_residual_info),
                     step.consistency_size])

    return rows

def write_trace_csv(trace, path):
    write_csv(path, TRACE_COLUMNS, trace_rows(trace))

def write_trace_json(trace, path):
    write_json(path, trace.to_dict())

"""
Provides some auxilliary functions that are used in various
points in the software.
"""

import csv
import json
import logging

import numpy as np

from .config import QUANTIZATION_DIGITS

logger = logging.getLogger(__name__)

def unique_rows(A, return_inverse=False):
    """
    Returns the array `B` of unique rows of the input array `A` and,
    if requested, the array `J` of row labels with `A = B[J,:]`.

    Parameters
    ----------

    A : numpy.ndarray
        The 2d array for which to determine the unique rows

    return_inverse : bool
        Whether to return `J`
    """

    A = np.require(A, requirements='C')
    assert A.ndim == 2, "Input array must be 2-dimensional"

    if not return_inverse:
        return np.unique(A, axis=0)

    B, J = np.unique(A, axis=0, return_inverse=True)

    # some numpy versions keep the input shape for the inverse
    return B, J.ravel()

def quantize(values, digits=QUANTIZATION_DIGITS):
    """
    Rounds the given values to a fixed number of decimal digits so that
    equality of the results is a proper equivalence relation.

    Parameters
    ----------

    values : array_like
        The values to quantize

    digits : int
        The number of decimal digits to keep
    """

    # adding zero turns negative zeros into positive ones
    return np.round(np.asarray(values, dtype=float), digits) + 0.

def as_axes(axes):
    """
    Turns a single axis index or an iterable of them into a tuple.
    """

    if isinstance(axes, (int, np.integer, str)):
        return (axes,)

    return tuple(axes)

def format_float(x):
    """
    Formats a float for text output, independently of the locale.
    """

    return format(float(x), '.15g')

def write_csv(path, header, rows):
    """
    Writes rows to a CSV file with `\\n` line endings.
    """

    with open(path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)

    logger.info("wrote %d row(s) to %s", len(rows), path)

def write_json(path, data):
    """
    Writes a JSON document with sorted keys.
    """

    with open(path, 'w', newline='') as f:
        json.dump(data, f, indent=2, sort_keys=True)
        f.write('\n')

    logger.info("wrote %s", path)

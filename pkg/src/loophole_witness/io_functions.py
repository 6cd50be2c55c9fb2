# coding=utf-8
# Copyright 2020 George Mihaila.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Functions related to reading and writing matrices, witnesses and result tables"""

import csv
import json
import os

import numpy as np

from .linalg_functions import DimensionError, PreconditionError, as_cmatrix, check_dims
from .state_functions import Ket, density_matrix, pure_state
from .witness_functions import LinearWitness

DOCUMENT_KINDS = ("density-matrix", "ket", "witness", "matrix")


def matrix_to_document(matrix, dims, kind="matrix", metadata=None):
    """JSON ready dictionary with row-major [re, im] entries.

    :param
      matrix: 2D array like.
    :param
      dims: subsystem dimensions recorded with the matrix.
    :param
      kind: one of DOCUMENT_KINDS.
    :param
      metadata: extra key/values (version, convention, tolerances).
    :return:
      dictionary.
    """

    if kind not in DOCUMENT_KINDS:
        raise ValueError("`kind=%s` is not in the supported kinds: %s!" % (str(kind), str(DOCUMENT_KINDS)))
    matrix = as_cmatrix(matrix, "matrix")
    return {"kind": kind,
            "dims": [int(d) for d in dims],
            "rows": int(matrix.shape[0]),
            "cols": int(matrix.shape[1]),
            "entries": [[float(value.real), float(value.imag)] for value in matrix.reshape(-1)],
            "metadata": dict(metadata or {})}


def document_to_matrix(document):
    """Inverse of `matrix_to_document`: (matrix, dims, kind)."""
    for key in ("kind", "dims", "rows", "cols", "entries"):
        # every key is required
        if key not in document:
            raise PreconditionError("matrix document is missing `%s`!" % key)
    rows, cols = int(document["rows"]), int(document["cols"])
    entries = np.array(document["entries"], dtype=float)
    if entries.shape != (rows * cols, 2):
        raise DimensionError("document has %d entries, needs %d [re, im] pairs!" % (len(entries), rows * cols))
    # rebuild complex entries in row-major order
    matrix = (entries[:, 0] + 1j * entries[:, 1]).reshape(rows, cols)
    return matrix, tuple(int(d) for d in document["dims"]), document["kind"]


def state_to_document(state, metadata=None):
    """Document of a DensityMatrix, or of a Ket stored as a single column."""
    if isinstance(state, Ket):
        return matrix_to_document(state.amplitudes.reshape(-1, 1), state.dims, "ket", metadata)
    return matrix_to_document(state.matrix, state.dims, "density-matrix", metadata)


def document_to_state(document, tol=None):
    """DensityMatrix from a 'density-matrix' or 'ket' document, with the full validity check."""
    matrix, dims, kind = document_to_matrix(document)
    if kind == "ket":
        # single column of amplitudes
        return pure_state(Ket(dims=dims, amplitudes=matrix.reshape(-1)))
    if kind not in ("density-matrix", "matrix"):
        raise PreconditionError("document of kind `%s` is not a state!" % kind)
    check_dims(dims, matrix)
    return density_matrix(matrix, dims, tol)


def witness_to_document(witness, metadata=None):
    document = matrix_to_document(witness.matrix, witness.dims, "witness", metadata)
    document["provenance"] = witness.provenance
    document["positive_map"] = witness.positive_map.name
    return document


def save_json(document, file_path):
    """Write a dictionary to `file_path`, creating missing directories.

    :return:
      path where file was saved.
    """

    directory = os.path.dirname(file_path)
    # create directory from path if it doesn't exist
    os.makedirs(directory) if directory and not os.path.isdir(directory) else None
    with open(file_path, 'w') as handle:
        json.dump(document, handle, indent=2)
    return file_path


def load_json(file_path):
    with open(file_path, 'r') as handle:
        return json.load(handle)


def load_state(file_path, tol=None):
    """DensityMatrix stored in a JSON matrix document (a ket becomes its projector)."""
    return document_to_state(load_json(file_path), tol)


def _metadata_lines(metadata):
    for key, value in (metadata or {}).items():
        yield "# %s: %s\n" % (key, json.dumps(value, sort_keys=True))


def write_csv(rows, header, file_path, metadata=None):
    """Write `#` metadata lines then a header and one line per row dict.

    :param
      rows: iterable of dicts keyed by `header`.
    :param
      header: column names in output order.
    :param
      file_path: output file, parent directories are created.
    :param
      metadata: dictionary written as `# key: json value` lines.
    :return:
      path where file was saved.
    """

    directory = os.path.dirname(file_path)
    os.makedirs(directory) if directory and not os.path.isdir(directory) else None
    with open(file_path, 'w', newline='') as handle:
        handle.writelines(_metadata_lines(metadata))
        writer = csv.DictWriter(handle, fieldnames=list(header), extrasaction='ignore')
        writer.writeheader()
        for row in rows:
            writer.writerow({key: repr(float(value)) if isinstance(value, float) else value for key, value in row.items()})
    return file_path


def _typed(value):
    for kind in (int, float):
        try:
            return kind(value)
        except ValueError:
            continue
    return value


def read_csv(file_path):
    """Read a table written by `write_csv`.

    :return:
      (metadata dict, list of typed row dicts).
    """

    metadata, lines = {}, []
    with open(file_path, 'r', newline='') as handle:
        for line in handle:
            if line.startswith('#'):
                key, _, value = line[1:].strip().partition(': ')
                metadata[key] = json.loads(value)
            else:
                lines.append(line)
    rows = [{key: _typed(value) for key, value in row.items()} for row in csv.DictReader(lines)]
    return metadata, rows


def rows_to_csv_text(rows, header, metadata=None):
    """Rows as CSV text for console output, in the layout `write_csv` puts in files.

    :param
      rows: iterable of dicts keyed by `header`.
    :param
      header: column names in output order.
    :param
      metadata: dictionary printed as `# key: json value` lines before the header.
    :return:
      text without a trailing newline.
    """

    # metadata lines already end with a newline
    lines = [line.rstrip("\n") for line in _metadata_lines(metadata)]
    lines.append(",".join(header))
    for row in rows:
        # floats use repr so the text parses back to the same values
        lines.append(",".join(repr(float(row[key])) if isinstance(row[key], float) else str(row[key]) for key in header))
    return "\n".join(lines)


def witness_from_document(document, positive_map):
    """Rebuild a LinearWitness; the positive map is not serialized and has to be given."""
    matrix, dims, kind = document_to_matrix(document)
    if kind != "witness":
        raise PreconditionError("document of kind `%s` is not a witness!" % kind)
    if positive_map.name != document.get("positive_map", positive_map.name):
        raise PreconditionError("document was built with map `%s`, got `%s`!"
                                % (document["positive_map"], positive_map.name))
    return LinearWitness(dims=dims, matrix=matrix, provenance=document["provenance"], positive_map=positive_map)

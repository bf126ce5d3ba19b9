# Copyright 2022 The ff_sentiment Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Reading and writing the delimited text files used throughout the package."""

import contextlib
import os
import tempfile

import numpy as np
import pandas as pd

MISSING_TOKENS = ("", ".", "nan", "NaN", "NA")


class SchemaError(ValueError):
    """Raised when an input file does not match its declared schema."""

    def __init__(self, path, message, line=None):
        self.path = str(path)
        self.line = line
        location = f"{path}:{line}" if line is not None else f"{path}"
        super().__init__(f"{location}: {message}")


def _leading_comment_lines(path):
    count = 0
    with open(path, encoding="utf-8") as stream:
        for line in stream:
            if not line.startswith("#"):
                break
            count += 1
    return count


def read_table(path, lowercase=True):
    """Reads a delimited file as a DataFrame of stripped strings.

    Leading `#` comment lines, such as the provenance header of files written by
    `write_table`, are skipped.  Column names are lowercased unless `lowercase`
    is False.
    """
    skip = _leading_comment_lines(path)
    try:
        frame = pd.read_csv(
            path,
            dtype=str,
            keep_default_na=False,
            skipinitialspace=True,
            skiprows=skip,
            encoding="utf-8",
        )
    except pd.errors.EmptyDataError:
        raise SchemaError(path, "no data rows")
    frame.columns = [
        str(c).strip().lower() if lowercase else str(c).strip()
        for c in frame.columns
    ]
    if len(frame) == 0:
        raise SchemaError(path, "no data rows")
    return frame.apply(lambda column: column.str.strip())


def check_header(path, frame, expected, optional=()):
    columns = tuple(frame.columns)
    missing = [c for c in expected if c not in columns]
    unexpected = [c for c in columns if c not in expected and c not in optional]
    if missing or unexpected:
        raise SchemaError(
            path,
            f"header should be {','.join(expected)}. Got {','.join(columns)}",
            line=1,
        )


def line_of(position):
    """Returns the line of data row `position`, counting the header as line 1."""
    return int(position) + 2


def parse_dates(path, values):
    dates = pd.to_datetime(values, format="%Y-%m-%d", errors="coerce")
    bad = np.flatnonzero(pd.isna(dates))
    if bad.size:
        position = bad[0]
        raise SchemaError(
            path,
            f"unparseable date {values.iloc[position]!r}",
            line=line_of(position),
        )
    return pd.DatetimeIndex(dates, name="date")


def parse_numbers(path, frame, column, allow_missing=False):
    raw = frame[column]
    missing = raw.isin(MISSING_TOKENS)
    values = pd.to_numeric(raw.where(~missing), errors="coerce").to_numpy(
        dtype=np.float64
    )
    invalid = np.isnan(values) & ~missing.to_numpy()
    invalid |= np.isinf(values)
    if not allow_missing:
        invalid |= missing.to_numpy()
    bad = np.flatnonzero(invalid)
    if bad.size:
        position = bad[0]
        raise SchemaError(
            path,
            f"malformed or non-finite value {raw.iloc[position]!r} in column "
            f"`{column}`",
            line=line_of(position),
        )
    return values


def sorted_unique(path, frame):
    if frame.index.has_duplicates:
        duplicated = frame.index[frame.index.duplicated()][0]
        raise SchemaError(path, f"duplicate date {duplicated.date().isoformat()}")
    return frame.sort_index(kind="mergesort")


@contextlib.contextmanager
def _atomic_stream(path):
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    handle, temp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(handle, "w", encoding="utf-8", newline="") as stream:
            yield stream
        os.replace(temp_path, path)
    except BaseException:
        if os.path.exists(temp_path):
            os.remove(temp_path)
        raise


def write_table(frame, path, header=None, index=True):
    """Writes `frame` as delimited text, atomically.

    The table is written to a temporary file in the destination directory and
    moved into place, so readers never observe a partial file.

    Args:
        frame: DataFrame to write.
        path: destination path.
        header: optional comment line written first, without the leading `# `.
        index: whether to write the frame's index as the first column.
    """
    with _atomic_stream(path) as stream:
        if header is not None:
            stream.write(f"# {header}\n")
        frame.to_csv(stream, index=index, float_format="%.17g", date_format="%Y-%m-%d")
    return os.fspath(path)


def write_text(text, path):
    """Writes `text` to `path` atomically."""
    with _atomic_stream(path) as stream:
        stream.write(text)
    return os.fspath(path)

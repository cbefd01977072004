#!/usr/bin/env python
# vim: ai ts=4 sts=4 et sw=4

"""Dataset CSV files: a header "label,r1,r2,...,rF" and one row per
   sample, a label followed by F cells of 0 or 1."""

import csv
import io

from pyqip import errors
from pyqip.pipeline import Dataset

HEADER_LABEL = "label"


def _rows(text, filename):
    reader = csv.reader(io.StringIO(text))
    for row in reader:
        # blank lines and comments don't count as samples
        if not row or not "".join(row).strip() or row[0].lstrip().startswith("#"):
            continue
        yield reader.line_num, [cell.strip() for cell in row]


def parse_dataset(text, filename=None, require_labels=True):
    """Parses dataset CSV text. Test files use the same format; pass
       require_labels=False to let their label cells stay empty."""
    rows = _rows(text, filename)
    try:
        line, header = next(rows)
    except StopIteration:
        raise errors.QipParseError("empty file", None, filename)

    if header[0].lower() != HEADER_LABEL or len(header) < 2:
        raise errors.QipParseError("expected header label,r1,...,rF", line, filename)
    width = len(header) - 1

    samples = []
    for line, row in rows:
        if len(row) != width + 1:
            raise errors.QipParseError(
                "expected %d region cells, got %d" % (width, len(row) - 1), line, filename)

        label = row[0]
        if require_labels and not label:
            raise errors.QipParseError("empty label", line, filename)

        cells = []
        for column, cell in enumerate(row[1:]):
            if cell not in ("0", "1"):
                raise errors.QipParseError(
                    "%s: cell %r is not 0 or 1" % (header[column + 1], cell), line, filename)
            cells.append(int(cell))
        samples.append((label, tuple(cells)))

    if not samples:
        raise errors.QipParseError("no samples", None, filename)
    if not require_labels:
        return samples
    return Dataset.from_rows(samples)


def read_dataset(path, require_labels=True):
    with open(path, newline="") as f:
        return parse_dataset(f.read(), path, require_labels)


def format_dataset(dataset):
    """The CSV text of a Dataset, or of (label, cells) rows."""
    if isinstance(dataset, Dataset):
        rows = [(label, v.components) for v, label in dataset.samples]
    else:
        rows = list(dataset)

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([HEADER_LABEL] + ["r%d" % (f + 1) for f in range(len(rows[0][1]))])
    for label, cells in rows:
        writer.writerow([label] + list(cells))
    return out.getvalue()

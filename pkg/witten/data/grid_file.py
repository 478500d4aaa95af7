__author__ = 'max'

import os
import json
from typing import Dict
import numpy as np
import torch

from witten.errors import InvalidInputError
from witten.utils import DTYPE, check_field, check_grid_size

TEXT_MAGIC = 'W2GRID'


def meta_path(path: str) -> str:
    return path + '.meta.json'


def _check_header(rows: int, cols: int):
    if rows != cols:
        raise InvalidInputError('grid should be square, got %d x %d' % (rows, cols))
    check_grid_size(rows)


def _is_text_grid(path: str) -> bool:
    with open(path, 'rb') as f:
        return f.read(len(TEXT_MAGIC)) == TEXT_MAGIC.encode('ascii')


def read_grid(path: str) -> torch.Tensor:
    """
    Reads a grid file in either format. Text files start with the `W2GRID <rows> <cols>`
    header; anything else is read as raw little-endian float64 with a `<path>.meta.json`
    sidecar holding rows and cols.

    Returns: Tensor [n, n]
    """
    if not os.path.exists(path):
        raise InvalidInputError('grid file not found: %s' % path)
    if _is_text_grid(path):
        with open(path, 'r') as f:
            header = f.readline().split()
            body = f.read().split()
        if len(header) != 3 or header[0] != TEXT_MAGIC:
            raise InvalidInputError('malformed grid header in %s' % path)
        rows, cols = int(header[1]), int(header[2])
        _check_header(rows, cols)
        try:
            data = np.array(body, dtype=np.float64)
        except ValueError:
            raise InvalidInputError('non-numeric value in grid file %s' % path)
    else:
        sidecar = meta_path(path)
        if not os.path.exists(sidecar):
            raise InvalidInputError('binary grid %s has no sidecar %s' % (path, sidecar))
        meta = json.load(open(sidecar, 'r'))
        rows, cols = int(meta['rows']), int(meta['cols'])
        _check_header(rows, cols)
        data = np.fromfile(path, dtype='<f8')

    if data.size != rows * cols:
        raise InvalidInputError('grid file %s holds %d values, expected %d' % (path, data.size, rows * cols))
    values = torch.from_numpy(data.reshape(rows, cols).astype(np.float64))
    check_field(values)
    return values


def write_grid(path: str, values: torch.Tensor, binary=False):
    values = torch.as_tensor(values, dtype=DTYPE)
    n = check_field(values)
    data = values.detach().cpu().numpy()
    if binary:
        data.astype('<f8').tofile(path)
        json.dump({'rows': n, 'cols': n}, open(meta_path(path), 'w'))
    else:
        with open(path, 'w') as f:
            f.write('{} {} {}\n'.format(TEXT_MAGIC, n, n))
            np.savetxt(f, data, fmt='%.17g')


def write_report(path: str, report: Dict):
    with open(path, 'w') as f:
        json.dump(report, f, indent=2)

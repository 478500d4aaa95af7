__author__ = 'max'

import json
import pytest
import torch

from witten.errors import InvalidInputError
from witten.data.grid_file import read_grid, write_grid, write_report, meta_path, TEXT_MAGIC
from witten.utils import DTYPE


def test_text_round_trip(tmp_path, generator):
    values = torch.rand(17, 17, generator=generator, dtype=DTYPE)
    path = str(tmp_path / 'f.grid')
    write_grid(path, values)
    with open(path, 'r') as f:
        assert f.readline().split() == [TEXT_MAGIC, '17', '17']
    assert torch.equal(read_grid(path), values)


def test_binary_round_trip(tmp_path, generator):
    values = torch.rand(9, 9, generator=generator, dtype=DTYPE)
    path = str(tmp_path / 'f.bin')
    write_grid(path, values, binary=True)
    assert json.load(open(meta_path(path), 'r')) == {'rows': 9, 'cols': 9}
    assert torch.equal(read_grid(path), values)


def _write_text(path, header, rows):
    with open(path, 'w') as f:
        f.write(header + '\n')
        for row in rows:
            f.write(' '.join(str(v) for v in row) + '\n')


def test_rejects_non_square(tmp_path):
    path = str(tmp_path / 'f.grid')
    _write_text(path, 'W2GRID 9 17', [[1.] * 17] * 9)
    with pytest.raises(InvalidInputError):
        read_grid(path)


def test_rejects_bad_size(tmp_path):
    path = str(tmp_path / 'f.grid')
    _write_text(path, 'W2GRID 10 10', [[1.] * 10] * 10)
    with pytest.raises(InvalidInputError):
        read_grid(path)


def test_rejects_count_mismatch(tmp_path):
    path = str(tmp_path / 'f.grid')
    _write_text(path, 'W2GRID 9 9', [[1.] * 9] * 8)
    with pytest.raises(InvalidInputError):
        read_grid(path)


def test_rejects_non_finite(tmp_path):
    path = str(tmp_path / 'f.grid')
    rows = [[1.] * 9 for _ in range(9)]
    rows[4][4] = float('inf')
    _write_text(path, 'W2GRID 9 9', rows)
    with pytest.raises(InvalidInputError):
        read_grid(path)


def test_missing_files(tmp_path):
    with pytest.raises(InvalidInputError):
        read_grid(str(tmp_path / 'missing.grid'))
    path = str(tmp_path / 'raw.bin')
    torch.zeros(81, dtype=DTYPE).numpy().tofile(path)
    with pytest.raises(InvalidInputError):
        read_grid(path)


def test_write_report(tmp_path):
    path = str(tmp_path / 'report.json')
    write_report(path, {'value': 1.5, 'converged': True})
    assert json.load(open(path, 'r')) == {'value': 1.5, 'converged': True}

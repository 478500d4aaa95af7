__author__ = 'max'

import pytest
import torch

from witten.data.densities import GaussianDensity


@pytest.fixture
def generator():
    return torch.Generator().manual_seed(6700417)


@pytest.fixture
def wide_gaussian():
    return GaussianDensity(mean=(0.5, 0.5), sigma=(0.1, 0.12))

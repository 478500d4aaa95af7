__author__ = 'max'

from witten.oracles.wasserstein import GaussianSpec, w2_gaussian_diag, w2_translate, w2_1d_quantile
from witten.oracles.dense import dense_norm_oracle

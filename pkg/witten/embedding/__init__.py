__author__ = 'max'

from witten.embedding.chebyshev import ChebApprox, chebyshev_sqrt
from witten.embedding.embed import EmbeddingField, embed, embedding_distance, spectral_bound, DEFAULT_DEGREE

__author__ = 'max'

from witten.errors import WittenError, InvalidInputError, NonConvergenceError, ConsistencyError
from witten.grid import DensityGrid, integrate, inner_product, normalize_density, l2_distance
from witten.potential import WittenPotential, build_potential, heat_time, potential_alternate_form_check
from witten.solvers import SolverConfig, NormResult, weighted_hm1_norm, unweighted_hm1_norm
from witten.embedding import EmbeddingField, embed, embedding_distance

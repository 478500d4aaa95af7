__author__ = 'max'

from witten.grid.density import DensityGrid, integrate, inner_product, normalize_density, l2_distance

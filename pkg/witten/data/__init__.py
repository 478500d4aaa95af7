__author__ = 'max'

from witten.data.grid_file import read_grid, write_grid, write_report
from witten.data.densities import AnalyticDensity, GaussianDensity, StripedDensity
from witten.data.densities import make_gaussian_grid, make_striped_bump_grid, make_translated_grid

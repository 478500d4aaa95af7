__author__ = 'max'

from witten.experiments.gaussian import cmd_gaussian_check, cmd_scaling, cmd_embed_demo, ScalingResult, gaussian_triple
from witten.experiments.circle import cmd_circle, run_circle_directions, CircleSetResult, read_circle_csv
from witten.experiments.timing import cmd_timing

"""Various ways to iterate on the cells of a grid (of parameters or of
initial conditions) and on the probe seeds.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


import itertools as itt
import random    as rd


#############
### Cells ###
#############

def iter_cells_row_major(axis_x, axis_y, iter_opts=None):
    """Yield (i, j, x, y) for every cell, the last axis varying fastest."""
    for (i, x), (j, y) in itt.product(enumerate(axis_x), enumerate(axis_y)):
        yield i, j, x, y


def iter_cells_shuffled(axis_x, axis_y, iter_opts=None):
    """Same cells in a random order ([iter_opts]['seed'], default 0).
    Used to check that the merge of the results does not depend on the
    order of the computations.
    """
    seed  = (iter_opts or {}).get("seed", 0)
    cells = list(iter_cells_row_major(axis_x, axis_y))
    rd.Random(seed).shuffle(cells)
    yield from cells


#############
### Seeds ###
#############

# Fractions of (K, nK) of the standard probe seeds.
PROBE_FRACTIONS = [
    (0.9, 0.5),
    (0.5, 0.5),
    (0.5, 1.0),
    (0.2, 0.2),
]


def iter_probe_seeds(p, eqs=None):
    """Initial conditions (dimensional) of the bounded cycle probe: the
    standard fractions of (K, nK), then a 1% perturbation of every
    repelling or marginal interior equilibrium.
    """
    K, nK = p["K"], p["n"] * p["K"]
    for fx, fy in PROBE_FRACTIONS:
        yield (fx * K, fy * nK)
    if eqs is None:
        return
    for rep in eqs["interior"]:
        if rep["numeric_class"] in ("repeller", "center_margin"):
            N, P = rep["dimensional"]["prey"], rep["dimensional"]["predator"]
            yield (1.01 * N, P)


####################
### Function IDs ###
####################

ITER_CELLS_FCTS = {
    "row_major": iter_cells_row_major,
    "shuffled" : iter_cells_shuffled,
}

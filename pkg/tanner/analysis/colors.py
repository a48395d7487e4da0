"""Specify some colors for plots.
"""

__author__ = "Rémi Barat"
__version__ = "1.0"


# Should be color-blind friendly;
# see http://colorbrewer2.org/
COLOR_BLIND = [
    "rgb(215, 48, 39)", # red
    "rgb( 69,117,180)", # light dark blue
    "rgb(253,174, 97)", # light orange
    "rgb( 49, 54,149)", # dark blue
    "rgb(165,  0, 38)", # dark red
    "rgb(116,173,209)", # blue
    "rgb(244,109, 67)", # orange
]

COLOR_DEFAULT = "rgb(166,189,219)" # light blue

COLOR_PREY_NULLCLINE     = "rgb(  0,153,  0)" # green
COLOR_PREDATOR_NULLCLINE = "rgb(153,  0,204)" # purple

# Region tag -> (fill, hatched)
REGION_COLORS = {
    "hatched_green": ("rgb( 77,175, 74)", True ),
    "solid_green"  : ("rgb( 77,175, 74)", False),
    "blue"         : ("rgb( 55,126,184)", False),
    "grey"         : ("rgb(153,153,153)", False),
    "solid_red"    : ("rgb(228, 26, 28)", False),
    "hatched_red"  : ("rgb(228, 26, 28)", True ),
    "solid_brown"  : ("rgb(166, 86, 40)", False),
    "hatched_brown": ("rgb(166, 86, 40)", True ),
    None           : ("rgb(255,255,255)", False),
}

BASIN_COLORS = {
    "interior_point"    : "rgb(171,217,233)", # light blue
    "interior_cycle"    : "rgb(255,255,191)", # light yellow
    "origin"            : "rgb(224,224,224)", # light grey
    "prey_extinct_point": "rgb(253,174, 97)", # light orange
    "undetermined"      : "rgb(  0,  0,  0)", # black
    None                : "rgb(255,255,255)", # white
}

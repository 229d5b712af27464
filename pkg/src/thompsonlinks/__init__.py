"""Thompson's group F: tree pairs, the Jones subgroup, and links from elements."""

from .dyadic import Dyadic
from .element import Element, NormalForm, from_word, multiply, invert, oplus, parse_element, to_normal_form
from .taitlink import PDCode, SignedPlaneGraph, medial_link, tait_graph
from .bracket import LaurentPoly, bracket, equiv_up_to_units
from .standardize import element_to_link, encode_link, thompson_index_bound

__version__ = "0.1.0"

"""Exact computations with GKM graphs: axioms, equivariant cohomology,
localization, surgeries, automorphisms, and the four-fixed-point classification."""

from .lattice import Weight, smith_normal_form
from .polyring import Polynomial, RationalFunction, linear_form, parse_polynomial, variables
from .graph import (Edge, GkmGraph, MalformedGraphError, ValidationReport, connections_along,
                    isomorphic, iter_isomorphisms, load, dump, validate)
from .cohomology import (EquivariantClass, Presentation, catalog_presentation, class_basis,
                         component_rank, hilbert_series, is_class, ordinary_poincare,
                         presentation_from_dict, verify_presentation)
from .chern import chern_data, chern_numbers, equivariant_chern, integrate, localize, pontryagin, todd
from .constructions import (ConstructionError, blowup_edge, blowup_vertex, catalog, catalog_from_params,
                            glue_s6)
from .symmetry import aut_star, gkm_automorphisms, induced_action
from .classify import WeightData, case_weights, distinctness_certificate, enumerate_graphs

__version__ = "0.1.0"

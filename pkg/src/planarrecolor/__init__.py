#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

import logging
import sys

__version__ = "0.1.0"

from planarrecolor.settings import globalsettings as settings
from .utils import is_interactive
from .model.plane import PlaneGraph, build_plane_graph, triangulate
from .model.coloring import ListAssignment, Coloring, RecolorStep, RecolorSequence
from .model.validation import ValidationReport, validate_sequence, is_k_good
from .model.solids import tetrahedron, octahedron, icosahedron, antiprism_sphere
from .model.io import dumps, load_document, parse_graph_document, parse_sequence
from .oracle.reconfig import build_reconfiguration_graph, bfs_shortest_sequence, diameter
from .engine.extension import extend_single_vertex, extend_degenerate
from .engine.finishing import finish_subgraph
from .engine.deferral import DeferralPlan, extend_with_deferral
from .engine.planar import recolor_planar
from .catalog.certificate import check_star_inequality, verify_certificate, prune_certificate
from .catalog.loader import builtin_catalog, get_entry, reference_trees
from .catalog.matcher import match_configuration
from .discharging.charges import initial_charges, apply_rules
from .discharging.audit import audit
from .cli.generate import gen_triangulation, gen_instance
from .exceptions import RecolorError
from .model.exceptions import GraphError, ColoringError
from .engine.exceptions import ExtensionError, TheoremViolation
from .catalog.exceptions import CatalogError

__all__ = [
    "settings",
    "PlaneGraph",
    "build_plane_graph",
    "triangulate",
    "ListAssignment",
    "Coloring",
    "RecolorStep",
    "RecolorSequence",
    "ValidationReport",
    "validate_sequence",
    "is_k_good",
    "tetrahedron",
    "octahedron",
    "icosahedron",
    "antiprism_sphere",
    "dumps",
    "load_document",
    "parse_graph_document",
    "parse_sequence",
    "build_reconfiguration_graph",
    "bfs_shortest_sequence",
    "diameter",
    "extend_single_vertex",
    "extend_degenerate",
    "finish_subgraph",
    "DeferralPlan",
    "extend_with_deferral",
    "recolor_planar",
    "check_star_inequality",
    "verify_certificate",
    "prune_certificate",
    "builtin_catalog",
    "get_entry",
    "reference_trees",
    "match_configuration",
    "initial_charges",
    "apply_rules",
    "audit",
    "gen_triangulation",
    "gen_instance",
    "RecolorError",
    "GraphError",
    "ColoringError",
    "ExtensionError",
    "TheoremViolation",
    "CatalogError",
]

logging.basicConfig(format="%(asctime)s - %(name)s - %(levelname)s - %(message)s", level=logging.INFO)
if is_interactive():
    logging.disable(logging.CRITICAL)
    sys.tracebacklimit = 0

#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

"""Contains the catalog of reducible configurations, their certificates and the matcher.
"""

from .exceptions import CatalogError, CertificateError, StarCheckError, PruningError
from .certificate import (
    NodeShape,
    OutTreeCertificate,
    BudgetReport,
    PRUNING_OPS,
    check_star_inequality,
    check_structure,
    verify_certificate,
    canonical_budget,
    prune_certificate,
    applicable_ops,
    random_pruning,
)
from .pattern import ConfigurationPattern, degree_matches, neighborhood_plan
from .loader import builtin_catalog, get_entry, reference_trees
from .matcher import MatchEmbedding, find_embeddings, match_configuration, match_all

__all__ = [
    "CatalogError",
    "CertificateError",
    "StarCheckError",
    "PruningError",
    "NodeShape",
    "OutTreeCertificate",
    "BudgetReport",
    "PRUNING_OPS",
    "check_star_inequality",
    "check_structure",
    "verify_certificate",
    "canonical_budget",
    "prune_certificate",
    "applicable_ops",
    "random_pruning",
    "ConfigurationPattern",
    "degree_matches",
    "neighborhood_plan",
    "builtin_catalog",
    "get_entry",
    "reference_trees",
    "MatchEmbedding",
    "find_embeddings",
    "match_configuration",
    "match_all",
]

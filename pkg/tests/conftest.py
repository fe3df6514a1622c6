#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

from __future__ import annotations

import os

from pytest import fixture
from pytest_mock import MockerFixture

from planarrecolor.cli.generate import InstanceBundle, gen_instance
from planarrecolor.model.io import GraphDocument
from planarrecolor.model.solids import icosahedron
from planarrecolor.settings import ENV_SEED

from .common import sample_document


@fixture()
def k4_doc() -> GraphDocument:
    return sample_document("k4_instance")


@fixture()
def edge_doc() -> GraphDocument:
    return sample_document("edge_instance")


@fixture()
def icosahedron_instance() -> InstanceBundle:
    return gen_instance(icosahedron(), 10, seed=3)


@fixture()
def mocked_seed(mocker: MockerFixture):
    mocker.patch.dict(os.environ, {ENV_SEED: "7"})

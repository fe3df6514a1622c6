#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

import json

from pytest_mock import MockerFixture

from planarrecolor.cli.main import (
    EXIT_CAP,
    EXIT_INVALID,
    EXIT_NO_CONFIGURATION,
    EXIT_NOT_K_GOOD,
    EXIT_OK,
    EXIT_VIOLATION,
    build_parser,
    run,
)
from planarrecolor.model.io import GraphDocument, parse_graph_document, parse_sequence, save
from planarrecolor.model.plane import build_plane_graph
from planarrecolor.model.solids import icosahedron, octahedron
from planarrecolor.model.validation import validate_sequence

from .common import data_file


def output(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def write_graph(tmp_path, name, g) -> str:
    filename = tmp_path / f"{name}.json"
    save(GraphDocument(g), filename)
    return str(filename)


def test_parser():
    args = build_parser().parse_args(["recolor", "--graph", "g.json", "--from", "alpha", "--k", "5"])
    assert args.command == "recolor"
    assert args.from_ == "alpha"
    assert args.k == 5


def test_gen_icosahedron(capsys):
    assert run(["gen", "--n", "12", "--min-degree", "5", "--seed", "1"]) == EXIT_OK
    assert build_plane_graph(output(capsys)) == icosahedron()


def test_gen_instance(capsys):
    assert run(["gen", "--n", "9", "--tree", "--instance", "--list-size", "4", "--seed", "2"]) == EXIT_OK
    payload = output(capsys)
    assert payload["seed"] == 2
    assert len(payload["lists"]) == 9
    assert all(len(x) == 4 for x in payload["lists"])


def test_gen_out(tmp_path, capsys):
    out = tmp_path / "tri.json"
    assert run(["gen", "--n", "15", "--seed", "4", "--out", str(out)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert parse_graph_document(out).graph.is_triangulation


def test_gen_seed_from_env(mocked_seed, capsys):
    assert run(["gen", "--n", "20", "--seed", "1"]) == EXIT_OK
    first = capsys.readouterr().out
    assert run(["gen", "--n", "20", "--seed", "2"]) == EXIT_OK
    assert capsys.readouterr().out == first


def test_gen_impossible(capsys):
    assert run(["gen", "--n", "13", "--min-degree", "5"]) == EXIT_INVALID
    assert "GenerationError" in capsys.readouterr().err


def test_recolor(capsys):
    graph = str(data_file("k4_instance"))
    assert run(["recolor", "--graph", graph]) == EXIT_OK
    payload = output(capsys)
    assert payload["k_good"] is True
    assert payload["k"] == 416
    doc = parse_graph_document(graph)
    assert validate_sequence(doc.graph, doc.lists, parse_sequence(payload), doc.beta).ok


def test_recolor_backwards(capsys):
    graph = str(data_file("k4_instance"))
    assert run(["recolor", "--graph", graph, "--from", "beta", "--to", "alpha"]) == EXIT_OK
    assert output(capsys)["start"] == [3, 2, 1, 0]


def test_recolor_lists_too_small():
    assert run(["recolor", "--graph", str(data_file("edge_instance"))]) == EXIT_INVALID


def test_recolor_missing_file(tmp_path):
    assert run(["recolor", "--graph", str(tmp_path / "missing.json")]) == EXIT_INVALID


def test_verify(capsys):
    graph, seq = str(data_file("edge_instance")), str(data_file("edge_sequence"))
    assert run(["verify", "--graph", graph, "--seq", seq]) == EXIT_OK
    payload = output(capsys)
    assert payload["valid"] is True
    assert payload["max_count"] == 2


def test_verify_over_budget():
    graph, seq = str(data_file("edge_instance")), str(data_file("edge_sequence"))
    assert run(["verify", "--graph", graph, "--seq", seq, "--k", "1"]) == EXIT_NOT_K_GOOD


def test_verify_invalid(tmp_path, capsys):
    seq = tmp_path / "seq.json"
    save({"start": [1, 2], "steps": [[0, 2]]}, seq)
    assert run(["verify", "--graph", str(data_file("edge_instance")), "--seq", str(seq)]) == EXIT_INVALID
    payload = output(capsys)
    assert payload["first_bad_step"] == 0


def test_oracle_diameter(capsys):
    assert run(["oracle", "--graph", str(data_file("edge_instance")), "--diameter"]) == EXIT_OK
    assert output(capsys)["diameter"] == 3


def test_oracle_path(capsys):
    assert run(["oracle", "--graph", str(data_file("edge_instance"))]) == EXIT_OK
    payload = output(capsys)
    assert payload["reachable"] is True
    assert payload["length"] == 3


def test_oracle_max_count(capsys):
    assert run(["oracle", "--graph", str(data_file("edge_instance")), "--max-count", "1"]) == EXIT_OK
    assert output(capsys)["reachable"] is False


def test_oracle_cap():
    assert run(["oracle", "--graph", str(data_file("edge_instance")), "--cap", "10"]) == EXIT_CAP


def test_detect(tmp_path, capsys):
    graph = write_graph(tmp_path, "ico", icosahedron())
    assert run(["detect", "--graph", graph]) == EXIT_OK
    payload = output(capsys)
    assert payload["found"] is True
    assert payload["matches"] == [{"id": "RC-5165a", "embedding": {"h": 0, "a": 1, "b": 2, "c": 3, "d": 4, "e": 5}}]


def test_detect_nothing(capsys):
    assert run(["detect", "--graph", str(data_file("k4_instance"))]) == EXIT_NO_CONFIGURATION
    assert output(capsys) == {"found": False, "matches": []}


def test_discharge(tmp_path, capsys):
    graph = write_graph(tmp_path, "ico", icosahedron())
    assert run(["discharge", "--graph", graph, "--trace"]) == EXIT_OK
    payload = output(capsys)
    assert len(payload["history"]) == 7
    assert payload["total"] == "-12"
    assert len(payload["unhappy"]) == 12


def test_discharge_min_degree(tmp_path):
    assert run(["discharge", "--graph", write_graph(tmp_path, "octa", octahedron())]) == EXIT_INVALID


def test_discharge_without_configuration(tmp_path, mocker: MockerFixture):
    mocker.patch("planarrecolor.discharging.audit.match_configuration", return_value=None)
    assert run(["discharge", "--graph", write_graph(tmp_path, "ico", icosahedron())]) == EXIT_VIOLATION


def test_catalog_check(capsys):
    assert run(["catalog-check"]) == EXIT_OK
    payload = output(capsys)
    assert payload["all_close"] is True
    assert payload["count"] == 35
    assert payload["reference_trees"]["2"]["minimal_k"] == 416


def test_catalog_check_low_budget():
    assert run(["catalog-check", "--k", "300"]) == EXIT_VIOLATION

#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

"""
This module contains out-tree certificates and their numeric verification.

A certificate assigns to each configuration vertex its shape r_s (degree r in the host, s inside the configuration)
and groups the vertices in stages joined by defer-arcs.
The recolor count of every vertex is bounded by an expression in k; a certificate closes at k
when every bound is at most k.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, FrozenSet, Hashable, Iterable, List, Literal, Mapping, Optional, Tuple

from planarrecolor.catalog.exceptions import CertificateError, PruningError, StarCheckError
from planarrecolor.engine.deferral import DeferArc, DeferralPlan, Stage
from planarrecolor.settings import globalsettings
from planarrecolor.utils.console import MsgLvl

logger = logging.getLogger(__name__)

StarClass = Literal["fails", "holds", "strict"]

PruningOp = Literal[
    "delete-leaf",
    "bump",
    "drop",
    "root-5-2-to-6-4",
    "leaf-5-1-to-6-3",
    "leaf-6-3-to-7-5",
    "collapse-6-3-5-1",
]
PRUNING_OPS: Tuple[PruningOp, ...] = (
    "delete-leaf",
    "bump",
    "drop",
    "root-5-2-to-6-4",
    "leaf-5-1-to-6-3",
    "leaf-6-3-to-7-5",
    "collapse-6-3-5-1",
)

MAX_RADIUS = 3
K_SEARCH_LIMIT = 1 << 24


def check_star_inequality(d_g: int, d_h: int) -> StarClass:
    """Classifies a vertex shape against d_H >= 2 d_G - 9.

    A strict vertex can root an out-tree.

    Example:
    >>> check_star_inequality(5, 2)
    'strict'
    >>> check_star_inequality(7, 4)
    'fails'
    """
    if d_h > d_g:
        raise StarCheckError(f"configuration degree {d_h} exceeds host degree {d_g}")
    margin = d_h - (2 * d_g - 9)
    if margin < 0:
        return "fails"
    return "holds" if margin == 0 else "strict"


@dataclass(frozen=True)
class NodeShape:
    d_g: int
    d_h: int

    @property
    def slack(self) -> int:
        """Neighbors outside the configuration."""
        return self.d_g - self.d_h

    def __str__(self) -> str:
        return f"{self.d_g}_{self.d_h}"


@dataclass(frozen=True)
class OutTreeCertificate:
    """Shapes, stages and defer-arcs of a configuration.

    Arcs point from a yielder (parent) to a beneficiary (child); the vertices without a parent are roots.
    adjacency holds the configuration edges; it is only needed to count the neighbors of a vertex in later stages.
    """

    shapes: Mapping[Hashable, NodeShape]
    stages: Tuple[Stage, ...]
    adjacency: FrozenSet[FrozenSet[Hashable]] = frozenset()
    list_size: int = field(default_factory=lambda: globalsettings.list_size)
    name: str = ""

    @classmethod
    def from_arcs(
        cls,
        shapes: Mapping[Hashable, NodeShape],
        arcs: Iterable[Tuple[Hashable, Hashable, int]],
        *,
        adjacency: Iterable[Tuple[Hashable, Hashable]] = (),
        name: str = "",
        list_size: int = None,
    ) -> OutTreeCertificate:
        """A single simultaneous stage holding every node."""
        stage = Stage(tuple(shapes), tuple(DeferArc(y, b, budget) for y, b, budget in arcs), "simultaneous")
        return cls(
            dict(shapes),
            (stage,),
            frozenset(frozenset(e) for e in adjacency),
            list_size if list_size is not None else globalsettings.list_size,
            name,
        )

    @property
    def nodes(self) -> Tuple[Hashable, ...]:
        return tuple(v for stage in self.stages for v in stage.vertices)

    @property
    def arcs(self) -> Tuple[DeferArc, ...]:
        return tuple(arc for stage in self.stages for arc in stage.arcs)

    @property
    def staged(self) -> bool:
        return len(self.stages) > 1

    def incoming(self, v: Hashable) -> Optional[DeferArc]:
        return next((arc for arc in self.arcs if arc.beneficiary == v), None)

    def parent(self, v: Hashable) -> Optional[Hashable]:
        arc = self.incoming(v)
        return arc.yielder if arc is not None else None

    def children(self, v: Hashable) -> Tuple[Hashable, ...]:
        return tuple(arc.beneficiary for arc in self.arcs if arc.yielder == v)

    def is_leaf(self, v: Hashable) -> bool:
        return not self.children(v)

    @property
    def roots(self) -> Tuple[Hashable, ...]:
        return tuple(v for v in self.nodes if self.incoming(v) is None)

    def depth(self, v: Hashable) -> int:
        seen = {v}
        depth = 0
        while (v := self.parent(v)) is not None:
            if v in seen:
                raise CertificateError(f"defer-arcs form a cycle through {v}", node=v)
            seen.add(v)
            depth += 1
        return depth

    def neighbors(self, v: Hashable) -> FrozenSet[Hashable]:
        return frozenset(u for e in self.adjacency if v in e for u in e if u != v)

    def stage_index(self, v: Hashable) -> int:
        return next(i for i, stage in enumerate(self.stages) if v in stage.vertices)

    def later(self, index: int) -> FrozenSet[Hashable]:
        return frozenset(v for stage in self.stages[index + 1 :] for v in stage.vertices)

    def current_degree(self, v: Hashable) -> int:
        """Host degree once the vertices of later stages are removed."""
        return self.shapes[v].d_g - len(self.neighbors(v) & self.later(self.stage_index(v)))

    def in_stage_degree(self, v: Hashable) -> int:
        if not self.staged:
            return self.shapes[v].d_h
        return len(self.neighbors(v) & set(self.stages[self.stage_index(v)].vertices))

    def lookahead(self, v: Hashable) -> int:
        return self.list_size - self.current_degree(v) - 1

    def star(self, v: Hashable) -> StarClass:
        if self.staged:
            return check_star_inequality(self.current_degree(v), self.in_stage_degree(v))
        shape = self.shapes[v]
        return check_star_inequality(shape.d_g, shape.d_h)

    def plan(self) -> DeferralPlan:
        return DeferralPlan(self.stages)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "nodes": {str(v): [s.d_g, s.d_h] for v, s in self.shapes.items()},
            "stages": [
                {
                    "kind": stage.kind,
                    "vertices": [str(v) for v in stage.vertices],
                    "arcs": [[str(a.yielder), str(a.beneficiary), a.budget] for a in stage.arcs],
                }
                for stage in self.stages
            ],
        }

    def __repr__(self) -> str:
        trees = ", ".join(f"{r}({len(self.children(r))})" for r in self.roots)
        return f"OutTreeCertificate({self.name or '?'}: {len(self.nodes)} nodes, roots {trees})"


def check_structure(cert: OutTreeCertificate) -> None:
    """Raises CertificateError unless arcs form out-trees of radius <= 3 inside their stages.

    Every node must satisfy the star inequality; roots must satisfy it strictly unless the certificate is staged.
    """
    seen = set()
    for v in cert.nodes:
        if v in seen:
            raise CertificateError(f"node {v} appears twice", node=v)
        if v not in cert.shapes:
            raise CertificateError(f"node {v} has no shape", node=v)
        seen.add(v)
    for stage in cert.stages:
        members = set(stage.vertices)
        beneficiaries = set()
        for arc in stage.arcs:
            if arc.yielder not in members or arc.beneficiary not in members:
                raise CertificateError(f"arc {arc.yielder}->{arc.beneficiary} leaves its stage", node=arc.yielder)
            if arc.beneficiary in beneficiaries:
                raise CertificateError(f"node {arc.beneficiary} has two parents", node=arc.beneficiary)
            if arc.budget < 0:
                raise CertificateError(f"negative budget on {arc.yielder}->{arc.beneficiary}", node=arc.beneficiary)
            if cert.adjacency and frozenset((arc.yielder, arc.beneficiary)) not in cert.adjacency:
                raise CertificateError(f"arc {arc.yielder}->{arc.beneficiary} is not an edge", node=arc.yielder)
            beneficiaries.add(arc.beneficiary)
    for v in cert.nodes:
        if cert.depth(v) > MAX_RADIUS:
            raise CertificateError(f"node {v} is deeper than {MAX_RADIUS}", node=v)
        star = cert.star(v)
        if star == "fails":
            raise StarCheckError(f"node {v} with shape {cert.shapes[v]} fails the star inequality", node=v)
    if not cert.staged:
        for r in cert.roots:
            if cert.star(r) != "strict":
                raise StarCheckError(f"root {r} with shape {cert.shapes[r]} is not a well", node=r)


def node_bounds(cert: OutTreeCertificate, k: int) -> Dict[Hashable, Fraction]:
    """Evaluates the recolor-count bound of every node at k, stage by stage."""
    bounds: Dict[Hashable, Fraction] = {}
    for stage in cert.stages:
        members = set(stage.vertices)
        look = {v: cert.lookahead(v) for v in stage.vertices}
        budget_in = {arc.beneficiary: arc.budget for arc in stage.arcs}
        for v in stage.vertices:
            if look[v] < 1:
                raise CertificateError(f"node {v} has no lookahead with lists of {cert.list_size}", node=v)
            earlier = [u for u in cert.neighbors(v) if u not in members and u in bounds]
            outside = Fraction(cert.shapes[v].slack * k) + sum((bounds[u] for u in earlier), Fraction(0))
            b_in = budget_in.get(v, 0)
            bound = Fraction(math.ceil(max(Fraction(0), outside - b_in) / look[v]))
            bound += Fraction(b_in, look[v] + 1)
            bound += sum(
                (Fraction(arc.budget, look[arc.beneficiary] + 1) for arc in stage.arcs if arc.yielder == v), Fraction(0)
            )
            bounds[v] = bound + stage.overhead
    return bounds


def closes(cert: OutTreeCertificate, k: int) -> bool:
    return all(b <= k for b in node_bounds(cert, k).values())


def minimal_k(cert: OutTreeCertificate) -> Optional[int]:
    """The smallest k at which the certificate closes, by doubling then binary search.

    Returns None when it does not close below K_SEARCH_LIMIT.
    """
    hi = 1
    while not closes(cert, hi):
        hi *= 2
        if hi > K_SEARCH_LIMIT:
            return None
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if closes(cert, mid):
            hi = mid
        else:
            lo = mid
    return hi


@dataclass
class BudgetReport:
    k: int
    bounds: Dict[Hashable, Fraction]
    minimal_k: Optional[int]
    stars: Dict[Hashable, StarClass] = field(default_factory=dict)
    offending: Optional[Hashable] = None
    name: str = ""

    @property
    def ok(self) -> bool:
        return self.offending is None

    @property
    def worst(self) -> Fraction:
        return max(self.bounds.values(), default=Fraction(0))

    @property
    def level(self) -> MsgLvl:
        return "success" if self.ok else "error"

    def raise_for_status(self):
        if not self.ok:
            bound = self.bounds[self.offending]
            raise CertificateError(
                f"{self.name or 'certificate'}: node {self.offending} may be recolored {bound} > {self.k} times",
                node=self.offending,
                bound=bound,
                k=self.k,
            )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "k": self.k,
            "closes": self.ok,
            "minimal_k": self.minimal_k,
            "offending": None if self.offending is None else str(self.offending),
            "bounds": {str(v): b for v, b in self.bounds.items()},
            "stars": {str(v): s for v, s in self.stars.items()},
        }

    def __repr__(self):
        status = "closes" if self.ok else f"fails at {self.offending}"
        return f"{self.name or 'certificate'}: {status} at k = {self.k}, minimal k = {self.minimal_k}"


def verify_certificate(cert: OutTreeCertificate, k: int = None) -> BudgetReport:
    """Evaluates every bound at k and finds the minimal closing k.

    Parameters
    ----------
    cert : OutTreeCertificate
        A well-formed certificate; structural problems raise CertificateError.
    k : int, optional
        The budget to check, by default settings.k

    Returns
    -------
    BudgetReport
        The bounds at k, the first node exceeding k if any, and the minimal k.

    Example:
    >>> tree = reference_trees()[2]
    >>> verify_certificate(tree, 416).minimal_k
    416
    """
    k = k if k is not None else globalsettings.k
    check_structure(cert)
    bounds = node_bounds(cert, k)
    offending = next((v for v, b in bounds.items() if b > k), None)
    report = BudgetReport(k, bounds, minimal_k(cert), {v: cert.star(v) for v in cert.nodes}, offending, cert.name)
    logger.debug(repr(report))
    return report


def canonical_budget(cert: OutTreeCertificate, v: Hashable) -> int:
    """look * (look + 1) * X where X = 2 + sum of look_c * X_c over the children c."""

    def weight(u: Hashable) -> int:
        return 2 + sum(cert.lookahead(c) * weight(c) for c in cert.children(u))

    look = cert.lookahead(v)
    return look * (look + 1) * weight(v)


def _is_applicable(cert: OutTreeCertificate, op: PruningOp, v: Hashable) -> bool:
    shape = cert.shapes[v]
    root = cert.incoming(v) is None
    leaf = cert.is_leaf(v)
    if op == "delete-leaf":
        return leaf
    if op == "bump":
        return shape.d_h < shape.d_g
    if op == "drop":
        return shape.d_g - 1 >= 5 and shape.d_h <= shape.d_g - 1
    if op == "root-5-2-to-6-4":
        return root and (shape.d_g, shape.d_h) == (5, 2)
    if op == "leaf-5-1-to-6-3":
        return leaf and not root and (shape.d_g, shape.d_h) == (5, 1)
    if op == "leaf-6-3-to-7-5":
        return leaf and not root and (shape.d_g, shape.d_h) == (6, 3)
    if op == "collapse-6-3-5-1":
        children = cert.children(v)
        return (
            not root
            and (shape.d_g, shape.d_h) == (6, 3)
            and len(children) == 1
            and cert.is_leaf(children[0])
            and (cert.shapes[children[0]].d_g, cert.shapes[children[0]].d_h) == (5, 1)
        )
    raise PruningError(f"unknown pruning operation {op}")


def applicable_ops(cert: OutTreeCertificate) -> List[Tuple[PruningOp, Hashable]]:
    if cert.staged:
        return []
    return [(op, v) for v in cert.nodes for op in PRUNING_OPS if _is_applicable(cert, op, v)]


def _rebuilt(cert: OutTreeCertificate, shapes: Dict[Hashable, NodeShape], arcs: List[DeferArc]) -> OutTreeCertificate:
    stage = Stage(tuple(v for v in cert.nodes if v in shapes), tuple(arcs), cert.stages[0].kind)
    return replace(cert, shapes=shapes, stages=(stage,))


def _capped_budget(cert: OutTreeCertificate, v: Hashable) -> OutTreeCertificate:
    """Lowers the incoming budget of v to its canonical value when that is smaller; never raises it."""
    arc = cert.incoming(v)
    budget = min(arc.budget, canonical_budget(cert, v))
    arcs = [DeferArc(a.yielder, a.beneficiary, budget) if a == arc else a for a in cert.arcs]
    return _rebuilt(cert, dict(cert.shapes), arcs)


def prune_certificate(cert: OutTreeCertificate, op: PruningOp, node: Hashable) -> OutTreeCertificate:
    """Applies one pruning operation at node.

    Parameters
    ----------
    cert : OutTreeCertificate
        A single-stage certificate.
    op : PruningOp
        One of PRUNING_OPS.
    node : Hashable
        The node the operation applies to.

    Returns
    -------
    OutTreeCertificate
        A new certificate closing at every k where cert closes.
        Only a substituted or collapsed node gets a new incoming budget, never a larger one.

    Example:
    >>> tree = reference_trees()[1]
    >>> verify_certificate(prune_certificate(tree, "delete-leaf", "x1"), 248).ok
    True
    """
    if cert.staged:
        raise PruningError(f"{cert.name or 'certificate'} is staged and cannot be pruned")
    if node not in cert.shapes:
        raise PruningError(f"no node {node} in {cert!r}")
    if not _is_applicable(cert, op, node):
        raise PruningError(f"{op} does not apply to node {node} with shape {cert.shapes[node]}")

    shapes = dict(cert.shapes)
    arcs = list(cert.arcs)
    shape = shapes[node]
    if op == "delete-leaf":
        del shapes[node]
        return _rebuilt(cert, shapes, [a for a in arcs if a.beneficiary != node])
    if op == "bump":
        shapes[node] = NodeShape(shape.d_g, shape.d_h + 1)
        return _rebuilt(cert, shapes, arcs)
    if op == "drop":
        shapes[node] = NodeShape(shape.d_g - 1, shape.d_h)
        return _rebuilt(cert, shapes, arcs)
    if op == "root-5-2-to-6-4":
        shapes[node] = NodeShape(6, 4)
        return _rebuilt(cert, shapes, arcs)
    if op == "leaf-5-1-to-6-3":
        shapes[node] = NodeShape(6, 3)
    elif op == "leaf-6-3-to-7-5":
        shapes[node] = NodeShape(7, 5)
    else:
        (child,) = cert.children(node)
        del shapes[child]
        shapes[node] = NodeShape(5, 1)
        arcs = [a for a in arcs if a.beneficiary != child]
    return _capped_budget(_rebuilt(cert, shapes, arcs), node)


def random_pruning(cert: OutTreeCertificate, rng: random.Random, steps: int) -> OutTreeCertificate:
    """Applies up to steps randomly drawn applicable operations."""
    for _ in range(steps):
        choices = applicable_ops(cert)
        if not choices:
            break
        op, v = rng.choice(choices)
        cert = prune_certificate(cert, op, v)
    return cert

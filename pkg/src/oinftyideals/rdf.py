"""Rdf module for mapping lattices and prim reports to rdf graphs.

Ideals are named ``<base>ideal/<index>``, so the same lattice always maps to
the same graph.

Example:
    >>> from oinftyideals import GroupSpec, WeightSystem
    >>> from oinftyideals.lattice import enumerate_ideals
    >>>
    >>> G = GroupSpec(0, [3])
    >>> lattice = enumerate_ideals(WeightSystem(G, tail=[G.element([1])]))
    >>> len(lattice_to_graph(lattice)) > 0
    True
"""
from __future__ import annotations

import json
from typing import Any, TYPE_CHECKING

from rdflib import Graph, Literal, Namespace, RDF, URIRef

from .invariant import InvariantSet

if TYPE_CHECKING:  # pragma: no cover
    from .lattice import IdealLattice
    from .prim import PrimReport

OI = Namespace("https://oinftyideals.readthedocs.io/vocabulary#")
DEFAULT_BASE = "urn:oinftyideals:"


def _graph() -> Graph:
    g = Graph()
    g.bind("oi", OI)
    return g


def _descriptor(data: Any) -> Literal:
    return Literal(json.dumps(data, sort_keys=True))


def _set_to_graph(g: Graph, node: URIRef, predicate: URIRef, s: InvariantSet) -> None:
    g.add((node, predicate, _descriptor(s.to_json())))


def lattice_to_graph(lattice: IdealLattice, base: str = DEFAULT_BASE) -> Graph:
    """Returns the lattice as a graph of ideals linked by covering."""
    g = _graph()
    root = URIRef(f"{base}lattice")
    g.add((root, RDF.type, OI.IdealLattice))
    g.add((root, OI["count"], Literal(len(lattice))))
    g.add((root, OI.complete, Literal(lattice.complete)))
    g.add((root, OI.condition, Literal(lattice.condition.status.value)))
    ideals = [URIRef(f"{base}ideal/{node.index}") for node in lattice]
    for node, ideal in zip(lattice, ideals):
        g.add((root, OI.ideal, ideal))
        g.add((ideal, RDF.type, OI.Ideal))
        if node.primitive:
            g.add((ideal, RDF.type, OI.PrimitiveIdeal))
        g.add((ideal, OI["index"], Literal(node.index)))
        _set_to_graph(g, ideal, OI.x, node.pair.x)
        _set_to_graph(g, ideal, OI.xinf, node.pair.xinf)
    for a, b in lattice.covers():
        g.add((ideals[b], OI.covers, ideals[a]))
    return g


def prim_to_graph(report: PrimReport, base: str = DEFAULT_BASE) -> Graph:
    """Returns the primitive ideal space as a graph."""
    g = _graph()
    root = URIRef(f"{base}prim")
    g.add((root, RDF.type, OI.PrimitiveIdealSpace))
    g.add((root, OI.regime, Literal(report.regime.value)))
    g.add((root, OI.group, Literal(str(report.weights.group))))
    for k, pair in enumerate(report.primitive):
        ideal = URIRef(f"{base}primitive/{k}")
        g.add((root, OI.primitiveIdeal, ideal))
        g.add((ideal, RDF.type, OI.PrimitiveIdeal))
        _set_to_graph(g, ideal, OI.x, pair.x)
        _set_to_graph(g, ideal, OI.xinf, pair.xinf)
    if not report.condition.satisfied:
        g.add((root, OI.circleComponent, Literal(str(report.condition.quotient))))
        g.add((root, OI.pointComponent, Literal(str(report.weights.group))))
    elif not report.enumerated and report.point_family:
        g.add((root, OI.pointFamily, Literal(True)))
    for k, x in enumerate(report.delta):
        member = URIRef(f"{base}delta/{k}")
        g.add((root, OI.delta, member))
        _set_to_graph(g, member, OI.x, x)
    return g

"""Utils for comparing ideal graphs and displaying debug information."""

from rdflib import Graph
from rdflib.compare import graph_diff, isomorphic

PREFIXES = """
@prefix oi: <https://oinftyideals.readthedocs.io/vocabulary#> .
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
"""


def expected_graph(body: str) -> Graph:
    """Parses turtle statements written against the oi vocabulary."""
    return Graph().parse(data=PREFIXES + body, format="turtle")


def assert_isomorphic(g1: Graph, g2: Graph) -> None:
    """Compares two graphs and asserts that they are isomorphic.

        If not isomorphic the triples only one side holds are dumped.

    Args:
        g1 (Graph): a graph to compare
        g2 (Graph): the graph to compare with

    """
    _isomorphic = isomorphic(g1, g2)
    if not _isomorphic:
        _dump_diff(g1, g2)
    assert _isomorphic


def _dump_diff(g1: Graph, g2: Graph) -> None:
    _, in_first, in_second = graph_diff(g1, g2)
    print("\nonly in actual:")
    _dump_turtle(in_first)
    print("\nonly in expected:")
    _dump_turtle(in_second)


def _dump_turtle(g: Graph) -> None:
    for _l in g.serialize(format="turtle").splitlines():
        if _l and not _l.startswith("@prefix"):
            print(_l)

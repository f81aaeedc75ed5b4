"""Rectilinear planarity testing for independent-parallel series-parallel graphs."""

from .graph import Graph, GraphClass, classify, parse_graph

__all__ = ["Graph", "GraphClass", "classify", "parse_graph"]

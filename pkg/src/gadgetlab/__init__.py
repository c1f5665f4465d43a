"""Hypergraph-coloring gadget reductions built on t-agreeing families."""

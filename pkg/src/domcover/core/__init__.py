"""Core algorithms: graphs, exact oracles, class recognizers, the tree family and grid guarding."""

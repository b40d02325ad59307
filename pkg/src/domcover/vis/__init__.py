"""Plots for benchmark output."""

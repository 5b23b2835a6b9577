"""Bisimulation games, reductions and the unravelling comonad for ALC and its extensions."""

"""Command-line tools for the Lie bialgebra library."""

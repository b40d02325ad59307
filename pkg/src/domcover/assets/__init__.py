"""Reference graph families, exhaustive enumerators and fixture grids."""

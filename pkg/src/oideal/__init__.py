"""Order ideals, perpendicular modules and Rees algebras over exact polynomial rings."""

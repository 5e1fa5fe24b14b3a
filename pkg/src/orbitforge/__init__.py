"""Mapping class group orbits of totally elliptic representations of punctured spheres."""

from .chains import ActionAngle, AngleVector, RationalAngle, parse_angle
from .orbits import Status, enumerate, verify_against_table
from .representation import from_coords, twist_algebraic, twist_geometric
from .surface import TwistGen, parse_word

__version__ = "0.1.0"

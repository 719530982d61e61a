"""denshoe: Denjoy minimal sets, Sturmian coding, Aubry-Mather orbits and
numerically certified heteroclinic horseshoes for exact symplectic twist maps."""

__version__ = "0.1.0"

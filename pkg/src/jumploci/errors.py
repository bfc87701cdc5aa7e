class UnsupportedRepresentation(TypeError):
    """An exact-only operation received a float-complex value."""


class DegenerateInput(ValueError):
    """All inputs are zero, so the answer is the whole torus."""


class InconsistentCharacter(ValueError):
    """The character does not factor through the presented group."""


class UnsupportedDegree(ValueError):
    pass


class InvariantViolation(ValueError):
    """A complex failed d o d = 0, or a similar structural check."""

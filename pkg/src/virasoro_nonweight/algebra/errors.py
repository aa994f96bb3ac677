"""Exceptions raised by the algebra layer."""


class ParameterError(ValueError):
    """A parameter or argument lies outside the domain an operation is defined on."""

    pass


class ModuleSpecError(ValueError):
    """A 𝔅-module specification is malformed or violates the bracket relations."""

    pass


class ElementParseError(ValueError):
    """Text or JSON does not describe a tensor element."""

    pass

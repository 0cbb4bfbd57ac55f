class UsageError(ValueError):
    """Bad arguments, e.g. an inverted range."""


class DomainError(ValueError):
    """A lattice point outside the domain of a coloring."""


class UnknownSymbolError(KeyError):
    """A symbol with no rule in a morphism or coding."""

    def __init__(self, symbol, position):
        self.symbol = symbol
        self.position = position
        super().__init__(f"no rule for symbol {symbol!r} at position {position}")

    def __str__(self):
        return self.args[0]


class ResourceLimitError(RuntimeError):
    """Output would exceed a configured size cap."""

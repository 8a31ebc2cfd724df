"""Exception types shared across the package and mapped to CLI exit codes."""


class InputFormatError(ValueError):
    """Malformed input file or parameter (CLI exit code 2)."""


class PreconditionError(ValueError):
    """Structurally valid input that violates an operation's precondition (CLI exit code 3)."""


class NotLinearQuotientsError(RuntimeError):
    """A colon ideal in the given generator order is not generated by variables."""

    def __init__(self, index, generator):
        self.index = index  # 0-based position in the given order
        self.generator = generator
        super().__init__(
            f"colon ideal of the generator at position {index} ({generator}) "
            "is not generated by variables"
        )


class OracleCapError(RuntimeError):
    """The brute-force Betti computation refused an input beyond its size caps."""

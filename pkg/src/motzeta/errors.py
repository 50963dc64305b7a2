"""Exception hierarchy shared by all modules."""


class MotzetaError(Exception):
    """Base class for every error raised by this package."""


class MissingSymbol(MotzetaError, KeyError):
    def __init__(self, symbol):
        super().__init__(symbol)
        self.symbol = symbol

    def __str__(self):
        return f"no value assigned to symbol {self.symbol}"


class ValidationError(MotzetaError, ValueError):
    """Configuration violates one or more invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class ParseError(MotzetaError, ValueError):
    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class UnknownComponent(MotzetaError, KeyError):
    def __str__(self):
        return f"unknown component id {self.args[0]!r}"


class MissingMu(MotzetaError):
    """A component has neither mu nor nu, so the form order is unknown."""


class MissingNu(MotzetaError):
    """A component lacks the discrepancy nu."""


class DLinear(MotzetaError):
    """``d`` is X_s-linear; the closed Serre-invariant formula does not apply."""

    def __init__(self, d, witness):
        self.d = d
        from .motive import _render_id

        self.witness = tuple(witness)
        super().__init__(
            f"d={d} is X_s-linear, witnessed by J={{{','.join(map(_render_id, self.witness))}}}; "
            f"run `blowup --make-nonlinear {d}` first"
        )


class MissingEdge(MotzetaError, KeyError):
    def __str__(self):
        i, j = self.args[0]
        return f"no edge between {i!r} and {j!r}"


class IterationCapExceeded(MotzetaError, RuntimeError):
    pass


class UnknownPreset(MotzetaError, KeyError):
    def __str__(self):
        return f"unknown preset {self.args[0]!r}"

"""Exception types shared across the package."""


class GraphFormsError(Exception):
    """Base class carrying a machine-readable code and a context mapping."""

    code = "error"

    def __init__(self, message, context=None):
        super().__init__(message)
        self.context = dict(context or {})

    def to_json(self):
        return {"code": self.code, "message": str(self), "context": self.context}


class ParseError(GraphFormsError):
    """Malformed input text or JSON."""

    code = "parse-error"


class DomainError(GraphFormsError):
    """Operation applied outside its mathematical domain."""

    code = "domain-error"


class CapacityError(DomainError):
    """Clique complex not built deep enough for the requested operation.

    Distinct from a domain error: the quantity may exist mathematically but
    cannot be computed honestly without enumerating deeper clique levels.
    """

    code = "capacity-error"

    def __init__(self, message, required_max_card, context=None):
        ctx = {"required_max_card": required_max_card}
        if context:
            ctx.update(context)
        super().__init__(message, ctx)
        self.required_max_card = required_max_card

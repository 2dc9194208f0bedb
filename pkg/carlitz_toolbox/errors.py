__all__ = [
    "CarlitzError",
    "DomainError",
    "VariableMismatchError",
    "BoundExceededError",
    "BudgetExceededError",
    "CanonicalFormError",
    "IntegralityError",
]


class CarlitzError(Exception):
    pass


class DomainError(CarlitzError, ValueError):
    pass


class VariableMismatchError(DomainError):
    pass


class BoundExceededError(DomainError):
    pass


class BudgetExceededError(DomainError):
    pass


class CanonicalFormError(CarlitzError):
    pass


# N(m,k) must always be an integer. seeing this means an arithmetic bug upstream
class IntegralityError(CarlitzError, ArithmeticError):
    pass

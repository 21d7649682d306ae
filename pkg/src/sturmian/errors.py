"""Exception hierarchy shared by all modules.

Three branches matter to callers (the CLI maps them to exit codes):
``ParseError`` for malformed text inputs, ``DomainError`` for operations
invoked outside their mathematical preconditions, and ``BudgetExceeded``
for configured resource caps.
"""


class SturmianError(Exception):
    """Base class for all package errors."""


class ParseError(SturmianError):
    """Malformed directive-sequence or representation text."""


class BudgetExceeded(SturmianError):
    """A configured memory or enumeration cap would be exceeded."""


class DomainError(SturmianError):
    """An operation was invoked outside its stated preconditions."""


class DirectiveExhausted(DomainError):
    """A finite directive sequence has no entry at the requested index."""


class NotABoundary(DomainError):
    """Prefix length falls strictly inside a block of the partition."""


class NotAnOccurrence(DomainError):
    """The requested standard word does not occur at the given position."""


class NotApplicable(DomainError):
    """A digit rewrite's local precondition does not hold."""


class NotAPalindrome(DomainError):
    """The given factor is not a palindrome (or is empty where forbidden)."""


class InvalidInput(DomainError):
    """A representation required to be valid is not."""


class InsufficientDirective(DomainError):
    """The directive sequence has too few large entries for the witness."""


class InvalidCuts(DomainError):
    """A claimed palindromic factorization contains a non-palindrome part."""


class ConstructionFailed(SturmianError):
    """Internal consistency failure; indicates a bug, not bad input."""


class InternalNontermination(SturmianError):
    """The normalization step cap fired; indicates a bug, not bad input."""

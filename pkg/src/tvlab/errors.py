"""Exception types shared across the toolkit."""


class TvlabError(Exception):
    """Base class for all toolkit errors."""


class FaceNotInComplex(TvlabError):
    """A face argument does not belong to the complex."""


class BadRank(TvlabError):
    """Invalid rank for a uniform matroid."""


class BadParameter(TvlabError):
    """A constructor parameter is outside its documented range."""


class NotAPermutation(TvlabError):
    """A facet order is not a permutation of the complex's facets."""


class NotAnAutomorphism(TvlabError):
    """A vertex map does not send facets to facets."""


class NotInvolution(TvlabError):
    """A vertex map is not its own inverse."""


class Disconnected(TvlabError):
    """An operation requiring a connected complex got a disconnected one."""


class NotBalanced(TvlabError):
    """A complex is not balanced for the given coloring."""


class InputNotShelling(TvlabError):
    """An order that must be a verified shelling fails verification."""


class HypothesisViolated(TvlabError):
    """The stated hypothesis of a bound formula does not hold."""


class CellBudgetExceeded(TvlabError):
    """A cell enumeration would exceed the configured budget."""

# twostep/invariants/pair.py

from twostep.core.scalars import format_scalar

PLAIN = "plain"
BINOMIAL = "binomial"
CONVENTIONS = (PLAIN, BINOMIAL)


class InvariantPair:
    """S and T of a binary quartic or ternary cubic, with how they were computed."""

    __slots__ = ("s", "t", "convention", "family")

    def __init__(self, s, t, convention, family):
        self.s = s
        self.t = t
        self.convention = convention
        self.family = family

    def as_dict(self):
        return {
            "S": format_scalar(self.s),
            "T": format_scalar(self.t),
            "convention": self.convention,
            "family": self.family,
        }

    def __eq__(self, other):
        if not isinstance(other, InvariantPair):
            return NotImplemented
        return (self.s, self.t, self.convention, self.family) == \
            (other.s, other.t, other.convention, other.family)

    __hash__ = None

    def __repr__(self):
        return (f"InvariantPair(S={format_scalar(self.s)}, T={format_scalar(self.t)}, "
                f"{self.family}, {self.convention})")

from dataclasses import dataclass


@dataclass(frozen=True)
class CongruenceVerdict:
    """Observed and predicted residues of one congruence instance.

    Both residues are stored normalised into [0, modulus).
    """

    modulus: int
    lhs_residue: int
    rhs_residue: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"Modulus must be positive, got {self.modulus}.")
        for residue in (self.lhs_residue, self.rhs_residue):
            if not (0 <= residue < self.modulus):
                raise ValueError(f"Residue {residue} is not reduced modulo {self.modulus}.")

    @classmethod
    def compare(cls, modulus: int, lhs: int, rhs: int) -> "CongruenceVerdict":
        """Build a verdict from unreduced (possibly negative) values."""
        return cls(modulus, lhs % modulus, rhs % modulus)

    @property
    def holds(self) -> bool:
        return self.lhs_residue == self.rhs_residue

"""The generalized flag variety G/P: dimension, Picard basis, the
beta invariants beta_alpha = <w_{0,P}(rho), alpha^vee>, anticanonical
weight rho + w_{0,P}(rho), and Schubert codimension."""

from dataclasses import dataclass
from functools import cached_property

from .errors import EngineError, NotAPCharacter, NotMinimalRep
from .rootsys import rho
from .weyl import act, is_minimal_coset_rep, length, longest_element


def _supported_on(root, members):
    return all(c == 0 for j, c in enumerate(root.coeffs) if (j + 1) not in members)


@dataclass(frozen=True)
class FlagVariety:
    rs: object
    par: object  # ParabolicSubset S_P

    def __post_init__(self):
        if not set(self.par.members) <= set(range(1, self.rs.rank + 1)):
            raise EngineError("parabolic indices %r outside 1..%d"
                              % (sorted(self.par.members), self.rs.rank))
        if len(self.par.members) == self.rs.rank:
            raise EngineError("S_P = S gives the degenerate variety G/G")

    @cached_property
    def w0p(self):
        return longest_element(self.par, self.rs)


@dataclass(frozen=True)
class BetaVector:
    """beta_alpha for each alpha in the Picard basis S \\ S_P."""

    values: dict

    def __getitem__(self, alpha):
        if alpha not in self.values:
            raise EngineError("beta is defined only on S \\ S_P, not node %d" % alpha)
        return self.values[alpha]


@dataclass(frozen=True)
class SchubertDatum:
    word: object
    dim: int
    codim: int
    smooth_asserted: bool = False


def dimension(fv):
    """dim G/P = |R^+| - |R_P^+|."""
    members = fv.par.members
    return sum(1 for r in fv.rs.positive_roots if not _supported_on(r, members))


def picard_basis(fv):
    """Ascending indices of S \\ S_P; these label D_alpha and C_alpha."""
    return fv.par.complement(fv.rs.rank)


def weight_to_divisor(fv, lam):
    """Coefficients over {D_alpha} of the line bundle of lam in X^*(P)."""
    for i in sorted(fv.par.members):
        if lam.coeffs[i - 1] != 0:
            raise NotAPCharacter(
                "weight has nonzero pairing %d with alpha_%d^vee in S_P"
                % (lam.coeffs[i - 1], i)
            )
    return tuple(lam.coeffs[a - 1] for a in picard_basis(fv))


def beta_values(fv):
    img = act(fv.w0p, rho(fv.rs), fv.rs)
    return BetaVector({a: img.coeffs[a - 1] for a in picard_basis(fv)})


def anticanonical_weight(fv):
    """rho + w_{0,P}(rho); lies in X^*(P)."""
    return rho(fv.rs) + act(fv.w0p, rho(fv.rs), fv.rs)


def schubert_codim(fv, word):
    if not is_minimal_coset_rep(word, fv.par, fv.rs):
        raise NotMinimalRep("word %r is not a minimal coset representative"
                            % (word.letters,))
    d = length(word, fv.rs)
    return SchubertDatum(word=word, dim=d, codim=dimension(fv) - d)

"""Divisor and curve classes on the blow-up Bl_Z(G/P) of a flag variety
along a smooth Schubert variety of codimension c >= 2.

Divisor classes live over the basis {Bl*D_alpha} + {E_Z}, curve classes
over {tilde C_alpha} + {e} with tilde C_alpha = Bl*C_alpha - e. The nef
cone is generated by the Bl*D_alpha together with H - E_Z (where H is
the pullback of sum D_alpha), the Mori cone by the tilde C_alpha and e,
and the anticanonical class is

    -K = sum (1 + beta_alpha) Bl*D_alpha - (c-1) E_Z
       = sum (beta_alpha + 2 - c) Bl*D_alpha + (c-1)(H - E_Z),

so -K is ample (nef) iff every margin beta_alpha - c + 2 is > 0 (>= 0),
and Fano / weak-Fano follow since -K is big whenever all margins are
nonnegative.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import BasisMismatch, CodimOutOfRange
from .flag import beta_values, dimension, picard_basis


class Verdict(str, Enum):
    FANO = "FANO"
    WEAK_FANO_NOT_FANO = "WEAK_FANO_NOT_FANO"
    NOT_WEAK_FANO = "NOT_WEAK_FANO"


class Big(str, Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class DivisorClass:
    basis: tuple  # picard_basis indices, fixes coordinate order
    pullback_coeffs: tuple  # over Bl*D_alpha
    exceptional_coeff: int  # of E_Z

    def scaled(self, m):
        return DivisorClass(
            self.basis,
            tuple(m * a for a in self.pullback_coeffs),
            m * self.exceptional_coeff,
        )


@dataclass(frozen=True)
class CurveClass:
    basis: tuple
    tilde_coeffs: tuple  # over tilde C_alpha
    e_coeff: int


@dataclass(frozen=True)
class ConeReport:
    nef_generators: list
    mori_generators: list
    # recorded facts from the source theorems, not recomputed
    globally_generated_equals_nef: bool = True
    h_minus_e_is_big: bool = True


@dataclass(frozen=True)
class FanoReport:
    betas: object
    codim: int
    margins: dict  # alpha -> beta_alpha - c + 2
    verdict: Verdict
    anticanonical_big: Big


def _check_codim(fv, c):
    d = dimension(fv)
    if not (2 <= c <= d):
        raise CodimOutOfRange("codimension %d outside 2..%d" % (c, d))


def nef_generators(fv, c):
    """{Bl*D_alpha} plus H - E_Z, with H = sum_alpha Bl*D_alpha."""
    _check_codim(fv, c)
    basis = picard_basis(fv)
    n = len(basis)
    gens = [
        DivisorClass(basis, tuple(1 if j == k else 0 for j in range(n)), 0)
        for k in range(n)
    ]
    gens.append(DivisorClass(basis, (1,) * n, -1))
    return gens


def mori_generators(fv, c):
    """{tilde C_alpha} plus e."""
    _check_codim(fv, c)
    basis = picard_basis(fv)
    n = len(basis)
    gens = [
        CurveClass(basis, tuple(1 if j == k else 0 for j in range(n)), 0)
        for k in range(n)
    ]
    gens.append(CurveClass(basis, (0,) * n, 1))
    return gens


def intersect(d, k):
    """Bilinear pairing from Bl*D_alpha . Bl*C_beta = delta, Bl*D_alpha . e = 0,
    E_Z . Bl*C_beta = 0, E_Z . e = -1, expanding tilde C_alpha = Bl*C_alpha - e."""
    if d.basis != k.basis:
        raise BasisMismatch("divisor basis %r vs curve basis %r" % (d.basis, k.basis))
    dot = sum(a * t for a, t in zip(d.pullback_coeffs, k.tilde_coeffs))
    # E_Z . tilde C_alpha = 1, E_Z . e = -1
    return dot + d.exceptional_coeff * (sum(k.tilde_coeffs) - k.e_coeff)


def to_nef_basis(d):
    """Coordinates over {Bl*D_alpha} + {H - E_Z}: (a_alpha + b, ..., -b)."""
    b = d.exceptional_coeff
    return tuple(a + b for a in d.pullback_coeffs) + (-b,)


def from_nef_basis(basis, coords):
    *m, h = coords
    return DivisorClass(basis, tuple(a + h for a in m), -h)


def anticanonical_class(fv, c):
    """-K of the blow-up, in both bases (cross-checked equal)."""
    _check_codim(fv, c)
    basis = picard_basis(fv)
    betas = beta_values(fv)
    d = DivisorClass(basis, tuple(1 + betas[a] for a in basis), -(c - 1))
    basis2 = tuple(betas[a] + 2 - c for a in basis) + (c - 1,)
    assert to_nef_basis(d) == basis2
    assert from_nef_basis(basis, basis2) == d
    return d, basis2


def is_nef(d):
    return all(x >= 0 for x in to_nef_basis(d))


def is_ample(d):
    return all(x > 0 for x in to_nef_basis(d))


def is_globally_generated(d):
    # the globally generated cone coincides with the nef cone
    return is_nef(d)


def cone_report(fv, c):
    return ConeReport(nef_generators(fv, c), mori_generators(fv, c))


def classify(fv, c):
    """Fano / weak-Fano verdict for Bl_Z(G/P) with Z a smooth Schubert
    variety of codimension c (existence and smoothness are the caller's
    assertion)."""
    _check_codim(fv, c)
    betas = beta_values(fv)
    margins = {a: betas[a] - c + 2 for a in picard_basis(fv)}
    if all(m > 0 for m in margins.values()):
        verdict = Verdict.FANO
    elif all(m >= 0 for m in margins.values()):
        verdict = Verdict.WEAK_FANO_NOT_FANO
    else:
        verdict = Verdict.NOT_WEAK_FANO
    big = Big.TRUE if verdict != Verdict.NOT_WEAK_FANO else Big.UNKNOWN
    return FanoReport(
        betas=betas, codim=c, margins=margins, verdict=verdict, anticanonical_big=big
    )


def classify_center(fv, datum):
    """Convenience path: read the codimension off a SchubertDatum."""
    return classify(fv, datum.codim)

"""Closed-form classification laws used as independent cross-checks
against the cone machinery in blowup.py.

None of these touch the Weyl group: the Grassmannian and full-flag laws
are pure arithmetic, the cominuscule law only needs the height of the
highest root. Agreement with blowup.classify is therefore a genuine
two-path verification.
"""

from .blowup import Verdict
from .errors import NotCominuscule, OutOfRange
from .rootsys import coroot_of
from .weyl import act, longest_element, ParabolicSubset


def grassmannian_classify(r, n, c):
    """Fano law for Bl_Z Gr(r, n), Z a smooth Schubert variety of codim c:
    Fano iff c <= n, weak-Fano boundary exactly at c = n + 1."""
    if not (1 <= r <= n - 1):
        raise OutOfRange("need 1 <= r <= n-1, got r=%d, n=%d" % (r, n))
    if not (2 <= c <= r * (n - r)):
        raise OutOfRange("codimension %d outside 2..%d" % (c, r * (n - r)))
    if c <= n:
        return Verdict.FANO
    if c == n + 1:
        return Verdict.WEAK_FANO_NOT_FANO
    return Verdict.NOT_WEAK_FANO


def grassmannian_point_classify(r, n):
    """Point-center case c = r(n-r): Fano exactly for projective spaces
    and Gr(2,4); weak-Fano-not-Fano exactly for Gr(2,5)."""
    if not (1 <= r <= n - 1):
        raise OutOfRange("need 1 <= r <= n-1, got r=%d, n=%d" % (r, n))
    c = r * (n - r)
    if c < 2:
        raise OutOfRange("point blow-up needs codimension >= 2, got %d" % c)
    if n + 1 > c:
        return Verdict.FANO
    if n + 1 == c:
        return Verdict.WEAK_FANO_NOT_FANO
    return Verdict.NOT_WEAK_FANO


def cominuscule_nodes(rs):
    """Simple roots occurring with coefficient 1 in the highest root."""
    return frozenset(
        i + 1 for i, k in enumerate(rs.highest_root.coeffs) if k == 1
    )


def _dim_maximal(rs, node):
    # dim G/P for the maximal parabolic at `node`
    return sum(1 for r in rs.positive_roots if r.coeffs[node - 1] != 0)


def dual_height(rs):
    """Coefficient sum of the highest coroot, i.e. <rho, alpha_0^vee>
    (dual Coxeter number minus one). Equals ht(alpha_0) exactly in the
    simply-laced types."""
    return sum(coroot_of(rs.highest_root, rs).coeffs)


def cominuscule_classify(rs, node, c):
    """Fano law on a cominuscule Grassmannian G/P_node: the boundary sits
    at c = <rho, alpha_0^vee> + 2.

    The coroot identity w_{0,P}(alpha_node^vee) = alpha_0^vee (see
    kannan_saha_check) gives beta_node = <rho, alpha_0^vee>; this is the
    coefficient sum of the highest coroot, which collapses to
    ht(alpha_0) only when all roots have the same length."""
    if node not in cominuscule_nodes(rs):
        raise NotCominuscule("node %d is not cominuscule in %s" % (node, rs.spec))
    dim = _dim_maximal(rs, node)
    if not (2 <= c <= dim):
        raise OutOfRange("codimension %d outside 2..%d" % (c, dim))
    h = dual_height(rs)
    if c < h + 2:
        return Verdict.FANO
    if c == h + 2:
        return Verdict.WEAK_FANO_NOT_FANO
    return Verdict.NOT_WEAK_FANO


def full_flag_classify(rs, c):
    """Fano law for blow-ups of G/B: Fano iff c = 2, boundary at c = 3."""
    if not (2 <= c <= len(rs.positive_roots)):
        raise OutOfRange(
            "codimension %d outside 2..%d" % (c, len(rs.positive_roots))
        )
    if c < 3:
        return Verdict.FANO
    if c == 3:
        return Verdict.WEAK_FANO_NOT_FANO
    return Verdict.NOT_WEAK_FANO


def kannan_saha_check(rs, node):
    """Verify w_{0, S\\{node}}(alpha_node^vee) = alpha_0^vee, the coroot
    identity behind the cominuscule law."""
    if node not in cominuscule_nodes(rs):
        raise NotCominuscule("node %d is not cominuscule in %s" % (node, rs.spec))
    par = ParabolicSubset.of(set(range(1, rs.rank + 1)) - {node})
    w0p = longest_element(par, rs)
    image = act(w0p, rs.simple_coroot(node), rs)
    return image == coroot_of(rs.highest_root, rs)

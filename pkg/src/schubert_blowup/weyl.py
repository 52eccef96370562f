"""Weyl group words and their exact action on the three coordinate bases.

Words are sequences of 1-based simple-reflection indices applied right to
left: act([i1, ..., ik], x) = s_{i1}(s_{i2}(...s_{ik}(x))). A brute-force
group enumeration (rank <= 3) serves as an independent testing oracle.
"""

from dataclasses import dataclass
from collections import deque

from .errors import IndexOutOfRange, RankTooLargeForOracle
from .rootsys import Coroot, Root, Weight, rho


@dataclass(frozen=True)
class WeylWord:
    letters: tuple
    reduced: bool = False

    def __len__(self):
        return len(self.letters)


@dataclass(frozen=True)
class ParabolicSubset:
    """The subset S_P of simple-root indices whose reflections lie in W_P."""

    members: frozenset

    @staticmethod
    def of(indices):
        return ParabolicSubset(frozenset(indices))

    def complement(self, rank):
        return tuple(i for i in range(1, rank + 1) if i not in self.members)


def _check_index(i, rs):
    if not (1 <= i <= rs.rank):
        raise IndexOutOfRange("reflection index %d outside 1..%d" % (i, rs.rank))


def reflect_weight(i, w, rs):
    """s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i."""
    _check_index(i, rs)
    C = rs.cartan.entries
    c = w.coeffs[i - 1]
    return Weight(
        tuple(w.coeffs[j] - c * C[j][i - 1] for j in range(rs.rank))
    )


def reflect_root(i, r, rs):
    """s_i(beta) = beta - <beta, alpha_i^vee> alpha_i."""
    _check_index(i, rs)
    C = rs.cartan.entries
    p = sum(C[i - 1][j] * r.coeffs[j] for j in range(rs.rank))
    coeffs = list(r.coeffs)
    coeffs[i - 1] -= p
    return Root(tuple(coeffs))


def reflect_coroot(i, c, rs):
    """Dual action: s_i(beta^vee) = beta^vee - <alpha_i, beta^vee> alpha_i^vee."""
    _check_index(i, rs)
    C = rs.cartan.entries
    p = sum(C[j][i - 1] * c.coeffs[j] for j in range(rs.rank))
    coeffs = list(c.coeffs)
    coeffs[i - 1] -= p
    return Coroot(tuple(coeffs))


_REFLECT = {Weight: reflect_weight, Root: reflect_root, Coroot: reflect_coroot}


def act(word, x, rs):
    """Apply the word right to left to a Weight, Root or Coroot."""
    f = _REFLECT[type(x)]
    for i in reversed(word.letters):
        x = f(i, x, rs)
    return x


def length(word, rs):
    """Bruhat length: number of positive roots sent negative."""
    n = 0
    for beta in rs.positive_roots:
        if not act(word, beta, rs).is_positive():
            n += 1
    return n


def longest_element(par, rs):
    """Longest element w_{0,P} of the parabolic subgroup W_P.

    Greedy ascent: append the smallest i in S_P with w(alpha_i) still
    positive; terminates when all of them are sent negative, with word
    length |R_P^+|.
    """
    members = sorted(par.members)
    letters = []
    word = WeylWord(())
    while True:
        for i in members:
            if act(word, rs.simple_root(i), rs).is_positive():
                letters.append(i)
                word = WeylWord(tuple(letters))
                break
        else:
            return WeylWord(tuple(letters), reduced=True)


def is_minimal_coset_rep(word, par, rs):
    """True iff w(alpha_i) > 0 for every i in S_P (w in W^P)."""
    return all(
        act(word, rs.simple_root(i), rs).is_positive() for i in sorted(par.members)
    )


def enumerate_coset_reps(par, rs, max_length):
    """All minimal coset representatives of W/W_P up to the length bound.

    Breadth-first over the Cayley graph, deduplicated by the (faithful)
    action on rho; output sorted by (length, lexicographic word).
    """
    start = rho(rs)
    seen = {start.coeffs: ()}
    level = [((), start)]
    depth = 0
    while level and depth < max_length:
        nxt = []
        for letters, img in level:
            for i in range(1, rs.rank + 1):
                # left multiplication by s_i: prepend the letter
                img2 = reflect_weight(i, img, rs)
                if img2.coeffs not in seen:
                    w2 = (i,) + letters
                    seen[img2.coeffs] = w2
                    nxt.append((w2, img2))
        level = nxt
        depth += 1
    reps = [
        WeylWord(w, reduced=True)
        for w in seen.values()
        if is_minimal_coset_rep(WeylWord(w), par, rs)
    ]
    reps.sort(key=lambda w: (len(w.letters), w.letters))
    return reps


_ORACLE_MAX_RANK = 3


def brute_force_group(rs):
    """Oracle: the whole Weyl group as weight-space actions, rank <= 3.

    Closure of the simple reflections under composition, each element
    keyed by its image of rho and carrying a shortest word.
    """
    if rs.rank > _ORACLE_MAX_RANK:
        raise RankTooLargeForOracle(
            "oracle limited to rank %d, got %d" % (_ORACLE_MAX_RANK, rs.rank)
        )

    def matmul(A, B):
        n = len(A)
        return tuple(
            tuple(sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )

    n = rs.rank
    C = rs.cartan.entries
    # s_i on weight coordinates: column vectors of the matrix
    gens = {}
    for i in range(1, n + 1):
        M = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
        for r in range(n):
            M[r][i - 1] -= C[r][i - 1]
        gens[i] = tuple(tuple(row) for row in M)

    ident = tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))

    def key(M):
        # image of rho = row sums
        return tuple(sum(row) for row in M)

    elements = {key(ident): (ident, ())}
    queue = deque([(ident, ())])
    while queue:
        M, word = queue.popleft()
        for i, S in gens.items():
            M2 = matmul(S, M)
            k = key(M2)
            if k not in elements:
                w2 = (i,) + word
                elements[k] = (M2, w2)
                queue.append((M2, w2))
    return [
        (M, WeylWord(w, reduced=True))
        for M, w in sorted(elements.values(), key=lambda e: (len(e[1]), e[1]))
    ]

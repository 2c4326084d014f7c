"""Simplicial cochain cohomology of a clique complex, over the rationals.

A k-form is a coefficient vector indexed by the k-simplices in their stored
order.  The exterior derivative is (df)(x) = sum_i (-1)^i f(x minus vertex i)
against the ascending-vertex reference orientation.  Betti numbers come from
rank-nullity: b_k = dim ker(d_k) - rank(d_{k-1}).
"""

from __future__ import annotations

from fractions import Fraction

from .complexes import CliqueComplex
from .linalg import (
    RationalMatrix,
    SpanSolver,
    Vector,
    column_space_basis,
    nullspace,
    rank,
    rref,
)


def coboundary_matrix(cx: CliqueComplex, k: int) -> RationalMatrix:
    """Matrix of d_k, rows indexed by (k+1)-simplices, columns by k-simplices."""
    rows = cx.count(k + 1)
    cols = cx.count(k)
    m = RationalMatrix(rows, cols)
    for r, x in enumerate(cx.simplices(k + 1)):
        for i in range(len(x)):
            face = x[:i] + x[i + 1:]
            m.data[r][cx.index_of(face)] = Fraction(-1 if i % 2 else 1)
    return m


def permutation_parity_sign(seq) -> int:
    """Sign of the permutation that sorts seq (distinct entries) ascending."""
    inversions = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


class Pullback:
    """Sparse form of the pullback P_k of a simplicial map on k-forms.

    Row x carries exactly one entry: (P_k f)(x) = sign(x) * f(image(x)),
    where image(x) is the ascending image simplex and sign(x) is the parity
    of sorting the image vertex list.
    """

    __slots__ = ("k", "size", "target_index", "sign")

    def __init__(self, k: int, size: int, target_index: list[int], sign: list[int]):
        self.k = k
        self.size = size
        self.target_index = target_index
        self.sign = sign

    def apply(self, f: Vector) -> Vector:
        return [Fraction(s) * f[t] for s, t in zip(self.sign, self.target_index)]

    def to_matrix(self) -> RationalMatrix:
        m = RationalMatrix(self.size, self.size)
        for r, (s, t) in enumerate(zip(self.sign, self.target_index)):
            m.data[r][t] = Fraction(s)
        return m

    def trace(self) -> int:
        return sum(s for r, (s, t) in enumerate(zip(self.sign, self.target_index))
                   if r == t)


def pullback(cx: CliqueComplex, image: tuple[int, ...], k: int) -> Pullback:
    """Pullback on k-forms of the vertex map given by the image tuple."""
    simplices = cx.simplices(k)
    targets = []
    signs = []
    for x in simplices:
        mapped = [image[v] for v in x]
        y = tuple(sorted(mapped))
        targets.append(cx.index_of(y))
        signs.append(permutation_parity_sign(mapped))
    return Pullback(k, len(simplices), targets, signs)


def pullback_matrix(cx: CliqueComplex, image: tuple[int, ...], k: int) -> RationalMatrix:
    return pullback(cx, image, k).to_matrix()


def verify_chain_map(cx: CliqueComplex, image: tuple[int, ...]) -> bool:
    """Check d_k P_k == P_{k+1} d_k in every degree."""
    for k in range(cx.dim + 1):
        d = coboundary_matrix(cx, k)
        pk = pullback(cx, image, k).to_matrix()
        pk1 = pullback(cx, image, k + 1).to_matrix() if k + 1 <= cx.dim \
            else RationalMatrix(0, 0)
        left = d * pk
        right = pk1 * d if k + 1 <= cx.dim else RationalMatrix(0, d.cols)
        if left != right:
            return False
    return True


class CochainSpaces:
    """Cached coboundaries, ranks, and canonical bases for one complex.

    Building kernels and solvers is the expensive part of the whole library,
    so anything that iterates over many maps of the same graph should share
    one instance.
    """

    def __init__(self, cx: CliqueComplex):
        self.cx = cx
        self._d: dict[int, RationalMatrix] = {}
        self._rank: dict[int, int] = {}
        self._cocycles: dict[int, list[Vector]] = {}
        self._images: dict[int, list[Vector]] = {}
        self._reps: dict[int, list[Vector]] = {}
        self._solver: dict[int, SpanSolver | None] = {}

    @property
    def dim(self) -> int:
        return self.cx.dim

    def coboundary(self, k: int) -> RationalMatrix:
        if k not in self._d:
            self._d[k] = coboundary_matrix(self.cx, k)
        return self._d[k]

    def coboundary_rank(self, k: int) -> int:
        """rank(d_k); zero outside 0..dim."""
        if not 0 <= k <= self.dim:
            return 0
        if k not in self._rank:
            self._rank[k] = rank(self.coboundary(k))
        return self._rank[k]

    def cocycle_basis(self, k: int) -> list[Vector]:
        """Canonical basis of ker(d_k) in degree k."""
        if not 0 <= k <= self.dim:
            return []
        if k not in self._cocycles:
            self._cocycles[k] = nullspace(self.coboundary(k))
            self._rank.setdefault(
                k, self.cx.count(k) - len(self._cocycles[k]))
        return self._cocycles[k]

    def coboundary_image_basis(self, k: int) -> list[Vector]:
        """Canonical basis of im(d_{k-1}) inside degree k; empty for k = 0."""
        if not 1 <= k <= self.dim:
            return []
        if k not in self._images:
            self._images[k] = column_space_basis(self.coboundary(k - 1))
        return self._images[k]

    def betti(self, k: int) -> int:
        if not 0 <= k <= self.dim:
            return 0
        cocycle_dim = self.cx.count(k) - self.coboundary_rank(k)
        return cocycle_dim - self.coboundary_rank(k - 1)

    def betti_numbers(self) -> tuple[int, ...]:
        return tuple(self.betti(k) for k in range(self.dim + 1))

    def representatives(self, k: int) -> list[Vector]:
        """Cocycles whose classes form a basis of H^k.

        Chosen by running RREF over the columns [image basis | cocycle basis]
        and keeping the cocycles that become pivots, so the choice is
        deterministic.
        """
        if k in self._reps:
            return self._reps[k]
        images = self.coboundary_image_basis(k)
        cocycles = self.cocycle_basis(k)
        if not cocycles:
            self._reps[k] = []
            return self._reps[k]
        height = self.cx.count(k)
        m = RationalMatrix.from_columns(images + cocycles, height)
        _, pivots = rref(m)
        reps = [cocycles[p - len(images)] for p in pivots if p >= len(images)]
        assert len(reps) == self.betti(k)
        self._reps[k] = reps
        return reps

    def _span_solver(self, k: int) -> SpanSolver | None:
        if k not in self._solver:
            reps = self.representatives(k)
            images = self.coboundary_image_basis(k)
            if not reps:
                self._solver[k] = None
            else:
                self._solver[k] = SpanSolver(reps + images, self.cx.count(k))
        return self._solver[k]

    def induced_matrix(self, image: tuple[int, ...], k: int) -> RationalMatrix:
        """Matrix of the map induced on H^k by pulling back along the vertex map.

        Column j holds the coordinates of [P_k h_j] in the representative
        basis; the pullback of each representative is solved against
        [representatives | image basis], which is legitimate because pullbacks
        of cocycles are cocycles and ker(d_k) = span(reps) + im(d_{k-1}).
        """
        b = self.betti(k)
        if b == 0:
            return RationalMatrix(0, 0)
        pb = pullback(self.cx, image, k)
        solver = self._span_solver(k)
        cols = []
        for h in self.representatives(k):
            coeffs = solver.solve(pb.apply(h))
            cols.append(coeffs[:b])
        out = RationalMatrix(b, b)
        for j, col in enumerate(cols):
            for i, x in enumerate(col):
                out.data[i][j] = x
        return out

    def induced_matrices(self, image: tuple[int, ...]) -> list[RationalMatrix]:
        return [self.induced_matrix(image, k) for k in range(self.dim + 1)]


def betti_numbers(cx: CliqueComplex) -> tuple[int, ...]:
    return CochainSpaces(cx).betti_numbers()

"""Kernel spaces of the twisted power-operation congruence.

A `HomProblem` fixes an odd prime p, a polynomial f monic in x of
x-degree d, a degree delta and a twist h in F_p[t] with nonzero
constant term.  The associated linear map sends a homogeneous
polynomial m of degree delta to the remainder of P(m) - h*m under
division by f; `hom_space` computes the kernel of that map on the
domain basis

    { t^i * x^j : i + j = delta, 0 <= j <= min(delta, d - 1) },

listed with the highest x-power first.  The kernel basis is returned in
reduced echelon form with respect to that monomial order, so it is
unique and deterministic.

When f is homogeneous (every problem built here has this form), the
dividend P(m) - h*m splits into homogeneous components of degrees
delta + u(p-1), each of which reduces mod f independently as a dense
vector over the x-exponent; that slice pipeline and the final row
reduction run on the selected kernel backend.  Inhomogeneous f falls
back to generic polynomial division.  Membership tests (`contains`)
always use generic division and never consult the stored basis.

The level-a kernel space ma_space(p, a) uses the half-flag divisor

    f = r^(a-1) * x * (x - t) * ... * (x - ((p-1)/2) t),

that is, a - 1 regular blocks (r = x^p - t^(p-1) x) together with the
lower half of the weights, at degree delta(a) and twist h(a).  This is
the half-step of the flag filtration walked by the bounds module; its
dimension is the quantity the rank reports consume.  Multiplying by r
maps level a into level a + 1 (the divisors differ by exactly one
regular block), and for a >= 3 every kernel element is divisible by r;
`mul_r_shift` and `div_r_shift` apply these moves and verify the
membership guarantees as they go.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernel
from .errors import ConsistencyError
from .ffpoly import BiPoly, FpScalar, PrimeModulus, TriPoly, binom_mod, is_divisible, poly_pow
from .reps import f_of, filtration_rep, r_poly
from .steenrod import SplitPoly, h_poly, parameters, q_of_split, total_power

__all__ = [
    "HomProblem",
    "HomSpace",
    "FpMatrix",
    "hom_space",
    "ma_space",
    "family_element",
    "contains",
    "mul_r_shift",
    "div_r_shift",
    "verify_qr_identity",
    "verify_substitution_identity",
    "verify_k_lemma",
]


@dataclass(frozen=True)
class HomProblem:
    """Input data for one kernel computation."""

    p: PrimeModulus
    f: BiPoly
    delta: int
    h: BiPoly

    def __post_init__(self):
        if self.f.modulus != self.p or self.h.modulus != self.p:
            raise ValueError("modulus mismatch")
        if not self.f.is_monic_in_x():
            raise ValueError("f must be monic in x")
        if self.delta < 0:
            raise ValueError("delta must be non-negative")
        if self.h.x_degree() > 0:
            raise ValueError("h must be a polynomial in t alone")
        if not self.h.coefficient(0, 0):
            raise ValueError("h must have nonzero constant term")

    def x_bound(self) -> int:
        """Largest x-exponent in the domain basis, min(delta, deg_x f - 1)."""
        return min(self.delta, self.f.x_degree() - 1)

    def domain_monomials(self) -> tuple[tuple[int, int], ...]:
        """(t-exp, x-exp) pairs of the domain basis, highest x-power first."""
        return tuple((self.delta - j, j) for j in range(self.x_bound(), -1, -1))


@dataclass(frozen=True)
class HomSpace:
    """A computed kernel: the problem plus a reduced echelon basis."""

    problem: HomProblem
    basis: tuple[BiPoly, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json(self, a: int | None = None, include_basis: bool = True) -> dict:
        out: dict = {"p": self.problem.p.p}
        if a is not None:
            out["a"] = a
        out["f"] = self.problem.f.text()
        out["delta"] = self.problem.delta
        out["dim"] = self.dim
        if include_basis:
            out["basis"] = [b.text() for b in self.basis]
        return out


class FpMatrix:
    """A matrix over F_p with exact row reduction."""

    __slots__ = ("modulus", "ncols", "_rows")

    def __init__(self, modulus: PrimeModulus, rows, ncols: int | None = None):
        p = modulus.p
        clean = []
        for row in rows:
            r = [v.value if isinstance(v, FpScalar) else v % p for v in row]
            clean.append(r)
        if ncols is None:
            if not clean:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(clean[0])
        for r in clean:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        self.modulus = modulus
        self.ncols = ncols
        self._rows = clean

    @property
    def nrows(self) -> int:
        return len(self._rows)

    def entry(self, r: int, c: int) -> FpScalar:
        return FpScalar(self._rows[r][c], self.modulus)

    def row_lists(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def rref(self) -> "FpMatrix":
        reduced = _kernel.rref(self._rows, self.ncols, self.modulus.p)
        return FpMatrix(self.modulus, reduced, self.ncols)

    def rank(self) -> int:
        return len(_kernel.rref(self._rows, self.ncols, self.modulus.p))

    def nullspace(self) -> "FpMatrix":
        """Kernel basis as rows, in reduced echelon form (unique)."""
        p = self.modulus.p
        reduced = _kernel.rref(self._rows, self.ncols, p)
        pivots = [next(c for c, v in enumerate(row) if v) for row in reduced]
        pivot_set = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            vec = [0] * self.ncols
            vec[free] = 1
            for prow, pc in zip(reduced, pivots):
                if prow[free]:
                    vec[pc] = (-prow[free]) % p
            basis.append(vec)
        return FpMatrix(self.modulus, _kernel.rref(basis, self.ncols, p), self.ncols)


def _graded_columns(problem: HomProblem) -> list[dict[tuple[int, int], int]]:
    # Fast path for homogeneous f: reduce each homogeneous component of
    # P(m) - h*m as a dense slice over the x-exponent.
    p = problem.p.p
    shift = p - 1
    delta = problem.delta
    d = problem.f.x_degree()
    fcoeffs = [0] * (d + 1)
    for i, j, c in problem.f.iterterms():
        fcoeffs[j] = c
    h_exps = [(i, c) for i, _j, c in problem.h.iterterms()]
    columns = []
    for i, j in problem.domain_monomials():
        slices: dict[int, list[int]] = {}
        bin_i = [binom_mod(i, s, p) for s in range(i + 1)]
        bin_j = [binom_mod(j, t, p) for t in range(j + 1)]
        for t, ct in enumerate(bin_j):
            if not ct:
                continue
            xe = j + t * shift
            for s, cs in enumerate(bin_i):
                if not cs:
                    continue
                deg = delta + (s + t) * shift
                w = slices.get(deg)
                if w is None:
                    w = slices[deg] = [0] * (xe + 1)
                elif len(w) <= xe:
                    w.extend([0] * (xe + 1 - len(w)))
                w[xe] = (w[xe] + cs * ct) % p
        for e, c in h_exps:
            deg = delta + e
            w = slices.get(deg)
            if w is None:
                w = slices[deg] = [0] * (j + 1)
            elif len(w) <= j:
                w.extend([0] * (j + 1 - len(w)))
            w[j] = (w[j] - c) % p
        col: dict[tuple[int, int], int] = {}
        for deg, w in slices.items():
            if len(w) > d:
                _kernel.reduce_slice(w, fcoeffs, p)
            for xe in range(min(len(w), d)):
                if w[xe]:
                    col[(deg - xe, xe)] = w[xe]
        columns.append(col)
    return columns


def _generic_columns(problem: HomProblem) -> list[dict[tuple[int, int], int]]:
    columns = []
    for i, j in problem.domain_monomials():
        m = BiPoly.monomial(problem.p, i, j)
        diff = total_power(m) - problem.h * m
        rem = diff.divmod_x(problem.f)[1]
        columns.append({(ti, xj): c for ti, xj, c in rem.iterterms()})
    return columns


def hom_space(problem: HomProblem) -> HomSpace:
    """Compute the kernel of m -> (P(m) - h*m) mod f on the domain basis."""
    domain = problem.domain_monomials()
    if not domain:
        return HomSpace(problem, ())
    if problem.f.is_homogeneous():
        columns = _graded_columns(problem)
    else:
        columns = _generic_columns(problem)
    keys = sorted({k for col in columns for k in col}, key=lambda t: (-t[1], -t[0]))
    rows = [[col.get(key, 0) for col in columns] for key in keys]
    matrix = FpMatrix(problem.p, rows, len(domain))
    basis = []
    for vec in matrix.nullspace().row_lists():
        coeffs = {domain[idx]: v for idx, v in enumerate(vec) if v}
        basis.append(BiPoly(problem.p, coeffs))
    return HomSpace(problem, tuple(basis))


def _ma_problem(p: PrimeModulus, a: int) -> HomProblem:
    pars = parameters(p, a)
    f = f_of(filtration_rep(p, a, (p.p + 1) // 2))
    return HomProblem(p, f, pars.delta, h_poly(p, a))


def ma_space(p: PrimeModulus, a: int) -> HomSpace:
    """The level-a kernel space at the half-flag divisor.

    f = r^(a-1) * prod over w = 0 .. (p-1)/2 of (x - w*t), with degree
    delta(a) and twist h(a).  Requiring the full r^a instead cuts the
    space down to the linear span of the family elements; the half-flag
    space is the one whose dimension (p - 1) the rank reports use.
    """
    return hom_space(_ma_problem(p, a))


def family_element(p: PrimeModulus, k: int) -> BiPoly:
    """t^((p-1)/2-k) x^k (k x^(p-1) + (1-k) t^(p-1)) for 0 <= k <= (p-1)/2.

    These lie in the level-2 kernel space and are linearly independent,
    so they witness dim >= (p+1)/2 there.
    """
    pp = p.p
    half = (pp - 1) // 2
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k <= half:
        raise ValueError(f"k must satisfy 0 <= k <= (p-1)/2, got {k}")
    lead = BiPoly.monomial(p, half - k, k)
    inner = BiPoly(p, {(0, pp - 1): k, (pp - 1, 0): 1 - k})
    return lead * inner


def _is_member(problem: HomProblem, m: BiPoly) -> bool:
    if m.modulus != problem.p:
        raise ValueError("modulus mismatch")
    if m.is_zero():
        return True
    if not m.is_homogeneous() or m.degree() != problem.delta:
        raise ValueError(f"m must be homogeneous of degree {problem.delta}")
    if m.x_degree() > problem.x_bound():
        raise ValueError("m lies outside the domain basis (x-degree too high)")
    diff = total_power(m) - problem.h * m
    return is_divisible(diff, problem.f)


def contains(space: HomSpace, m: BiPoly) -> bool:
    """Direct membership test: does f divide P(m) - h*m?

    This re-checks divisibility from scratch and never consults the
    stored basis, so it cross-validates the elimination.
    """
    return _is_member(space.problem, m)


def mul_r_shift(p: PrimeModulus, a: int, b: int, m: BiPoly) -> BiPoly:
    """Map a level-a kernel element to level b >= a via m * r^(b-a)."""
    pp = p.p
    if not 2 <= a <= pp - 1:
        raise ValueError(f"a must satisfy 2 <= a <= p-1, got {a}")
    if b < a:
        raise ValueError(f"b must be at least a, got {b} < {a}")
    if not _is_member(_ma_problem(p, a), m):
        raise ValueError("m is not in the level-a kernel space")
    out = m * poly_pow(r_poly(p), b - a)
    if not _is_member(_ma_problem(p, b), out):
        raise ConsistencyError(
            f"r-multiple of a level-{a} kernel element fell outside level {b}"
        )
    return out


def div_r_shift(p: PrimeModulus, a: int, m: BiPoly) -> BiPoly:
    """Map a level-a kernel element (a >= 3) down to level a-1 via m / r."""
    if not 3 <= a <= p.p:
        raise ValueError(f"a must satisfy 3 <= a <= p, got {a}")
    if not _is_member(_ma_problem(p, a), m):
        raise ValueError("m is not in the level-a kernel space")
    quotient, rem = m.divmod_x(r_poly(p))
    if not rem.is_zero():
        raise ConsistencyError(f"level-{a} kernel element is not divisible by r")
    if not _is_member(_ma_problem(p, a - 1), quotient):
        raise ConsistencyError(
            f"quotient by r of a level-{a} kernel element fell outside level {a - 1}"
        )
    return quotient


def verify_qr_identity(p: PrimeModulus) -> bool:
    """Check Q(r) == r^(p-1) + (1 + t^(p-1))^(p-1)."""
    pp = p.p
    split_r = SplitPoly(p, FpScalar(1, p), tuple(FpScalar(k, p) for k in range(pp)))
    lhs = q_of_split(split_r)
    one_plus_tau = BiPoly(p, {(0, 0): 1, (pp - 1, 0): 1})
    rhs = poly_pow(r_poly(p), pp - 1) + one_plus_tau ** (pp - 1)
    return lhs == rhs


def verify_substitution_identity(p: PrimeModulus) -> bool:
    """Check (x - k*t)^p - t^(p-1)(x - k*t) == x^p - t^(p-1)x for all k."""
    pp = p.p
    r = r_poly(p)
    tau_pow = BiPoly.monomial(p, pp - 1, 0)
    for k in range(pp):
        linear = BiPoly(p, {(0, 1): 1, (1, 0): -k})
        if linear ** pp - tau_pow * linear != r:
            return False
    return True


def verify_k_lemma(p: PrimeModulus) -> bool:
    """Check prod_k (K + (x - k*t)^(p-1)) == r^(p-1) + K (K + t^(p-1))^(p-1)."""
    pp = p.p
    one = BiPoly.one(p)
    zero = BiPoly.zero(p)
    lhs = TriPoly(p, [one])
    for k in range(pp):
        linear = BiPoly(p, {(0, 1): 1, (1, 0): -k})
        lhs = lhs * TriPoly(p, [linear ** (pp - 1), one])
    tau_pow = BiPoly.monomial(p, pp - 1, 0)
    k_shift = TriPoly(p, [tau_pow, one]) ** (pp - 1)
    rhs = TriPoly(p, [poly_pow(r_poly(p), pp - 1)]) + TriPoly(p, [zero, one]) * k_shift
    return lhs == rhs

"""Hom-dimension bookkeeping along the flag filtration and torsion rank bounds.

`filtration_table` walks k = 0 .. p through the representations
V(a-1) + U(k) (a - 1 regular summands plus the first k weights) and
records the kernel dimension at each step against the fixed level
degree and twist.  The first half of the table sits on the plateau at
dimension p; from k = (p+1)/2 on, the complement rule converts each
dimension into an Ext count ext11 = p - hom_dim.

`rank_report` reduces the level-a kernel dimension to the bounds on the
torsion subgroup: the proven window is 1 <= rank <= (p+1)/2, the value
observed at the algebraic level is rank_e2 = p - dim, and rank_e2 == 1
is the single-summand (Z/p) outcome.  `sweep` runs rank reports over
every pair (p, a) with p*a below a budget, optionally in parallel; the
report content is deterministic and independent of the worker count.
"""

from __future__ import annotations

import concurrent.futures
import time
from dataclasses import dataclass

from . import _kernel
from ._version import __version__
from .errors import ConsistencyError
from .ffpoly import PrimeModulus, _is_prime
from .homspace import HomProblem, hom_space, ma_space
from .reps import f_of, filtration_rep
from .steenrod import h_poly, parameters

__all__ = [
    "FiltrationRow",
    "FiltrationTable",
    "RankReport",
    "SweepRow",
    "SweepReport",
    "filtration_table",
    "pre_filtration_dims",
    "rank_report",
    "sweep",
    "ORDER_STATEMENT",
]

ORDER_STATEMENT = "all p-power torsion has order p"


@dataclass(frozen=True)
class FiltrationRow:
    k: int
    dim_v: int
    hom_dim: int
    ext11: int | None

    def to_json(self) -> dict:
        return {"k": self.k, "dim_v": self.dim_v, "hom_dim": self.hom_dim, "ext11": self.ext11}


@dataclass(frozen=True)
class FiltrationTable:
    p: PrimeModulus
    a: int
    rows: tuple[FiltrationRow, ...]

    def hom_dims(self) -> tuple[int, ...]:
        return tuple(row.hom_dim for row in self.rows)

    def to_json(self) -> dict:
        return {
            "p": self.p.p,
            "a": self.a,
            "rows": [row.to_json() for row in self.rows],
        }

    def to_csv(self) -> str:
        lines = ["k,dim_v,hom_dim,ext11"]
        for row in self.rows:
            ext = "" if row.ext11 is None else str(row.ext11)
            lines.append(f"{row.k},{row.dim_v},{row.hom_dim},{ext}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RankReport:
    p: PrimeModulus
    a: int
    dim_ma: int
    ext11: int
    rank_lower: int
    rank_upper: int
    rank_e2: int
    conjecture_zp: bool
    order_statement: str


@dataclass(frozen=True)
class SweepRow:
    report: RankReport
    ms: float

    def to_json(self) -> dict:
        r = self.report
        return {
            "p": r.p.p,
            "a": r.a,
            "dim_ma": r.dim_ma,
            "ext11": r.ext11,
            "rank_lower": r.rank_lower,
            "rank_upper": r.rank_upper,
            "conjecture_zp": r.conjecture_zp,
            "ms": round(self.ms, 3),
        }


@dataclass(frozen=True)
class SweepReport:
    max_pa: int
    engine: str
    rows: tuple[SweepRow, ...]

    def to_json(self) -> dict:
        return {
            "max_pa": self.max_pa,
            "engine": self.engine,
            "rows": [row.to_json() for row in self.rows],
        }

    def to_csv(self) -> str:
        lines = ["p,a,dim_ma,ext11,rank_lower,rank_upper,conjecture_zp,ms"]
        for row in self.rows:
            d = row.to_json()
            flag = "true" if d["conjecture_zp"] else "false"
            lines.append(
                f"{d['p']},{d['a']},{d['dim_ma']},{d['ext11']},"
                f"{d['rank_lower']},{d['rank_upper']},{flag},{d['ms']}"
            )
        return "\n".join(lines) + "\n"


def filtration_table(p: PrimeModulus, a: int) -> FiltrationTable:
    """Kernel dimensions against f(V(a-1) + U(k)) for k = 0 .. p."""
    pars = parameters(p, a)
    h = h_poly(p, a)
    pp = p.p
    rows = []
    for k in range(pp + 1):
        rep = filtration_rep(p, a, k)
        space = hom_space(HomProblem(p, f_of(rep), pars.delta, h))
        rows.append((k, rep.dim, space.dim))
    half = (pp - 1) // 2
    for k, _dv, dim in rows[: half + 1]:
        if dim != pp:
            raise ConsistencyError(f"expected the dimension plateau at p for k={k}, got {dim}")
    for (_k0, _d0, prev), (k1, _d1, cur) in zip(rows, rows[1:]):
        if prev - cur not in (0, 1):
            raise ConsistencyError(
                f"hom dimension must drop by 0 or 1 at each step; got {prev} -> {cur} at k={k1}"
            )
    out = tuple(
        FiltrationRow(k, dv, dim, pp - dim if k >= half + 1 else None) for k, dv, dim in rows
    )
    return FiltrationTable(p, a, out)


def pre_filtration_dims(p: PrimeModulus, a: int) -> tuple[int, ...]:
    """Kernel dimensions against f(V(a-2) + U(k)) for k = 0 .. p.

    Uses the level-a degree and twist but one fewer regular summand;
    the expected staircase is (0, 1, ..., p).  Requires a >= 3 so that
    V(a-2) still contains a regular summand.
    """
    if a < 3:
        raise ValueError(f"a must be at least 3, got {a}")
    pars = parameters(p, a)
    h = h_poly(p, a)
    dims = []
    for k in range(p.p + 1):
        rep = filtration_rep(p, a - 1, k)
        space = hom_space(HomProblem(p, f_of(rep), pars.delta, h))
        dims.append(space.dim)
    return tuple(dims)


def rank_report(p: PrimeModulus, a: int) -> RankReport:
    """Bounds on the torsion rank at level a, derived from dim of the kernel."""
    pp = p.p
    dim = ma_space(p, a).dim
    if dim < (pp + 1) // 2:
        raise ConsistencyError(
            f"kernel dimension {dim} is below the proven lower bound {(pp + 1) // 2}"
        )
    ext11 = pp - dim
    if not 1 <= ext11 <= (pp + 1) // 2:
        raise ConsistencyError(
            f"ext11 = {ext11} violates the proven window 1 <= rank <= {(pp + 1) // 2}"
        )
    return RankReport(
        p=p,
        a=a,
        dim_ma=dim,
        ext11=ext11,
        rank_lower=1,
        rank_upper=(pp + 1) // 2,
        rank_e2=ext11,
        conjecture_zp=ext11 == 1,
        order_statement=ORDER_STATEMENT,
    )


def _sweep_pairs(max_pa: int) -> list[tuple[int, int]]:
    pairs = []
    for q in range(3, max_pa // 2 + 1, 2):
        if _is_prime(q):
            for a in range(2, max_pa // q + 1):
                pairs.append((q, a))
    return pairs


def _sweep_row(pair: tuple[int, int]) -> SweepRow:
    q, a = pair
    start = time.perf_counter()
    report = rank_report(PrimeModulus(q), a)
    ms = (time.perf_counter() - start) * 1000.0
    return SweepRow(report, ms)


def sweep(max_pa: int, parallelism: int = 1) -> SweepReport:
    """Rank reports for every pair (p odd prime, a >= 2) with p*a <= max_pa.

    Pairs are ordered by p ascending then a ascending.  Rows may be
    computed by a process pool; the merged report does not depend on
    the worker count (timings aside).
    """
    if max_pa < 6:
        raise ValueError(f"max_pa must be at least 6, got {max_pa}")
    if parallelism < 1:
        raise ValueError(f"parallelism must be at least 1, got {parallelism}")
    pairs = _sweep_pairs(max_pa)
    if parallelism == 1 or len(pairs) <= 1:
        rows = [_sweep_row(pair) for pair in pairs]
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=parallelism) as pool:
            rows = list(pool.map(_sweep_row, pairs))
    engine = f"powker/{__version__} ({_kernel.backend()})"
    return SweepReport(max_pa=max_pa, engine=engine, rows=tuple(rows))

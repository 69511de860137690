"""Structure tables for a class of (0,1)-matrices with fixed margins.

Everything here is derived from the structure matrix

    t[k][l] = k*l - (S_1 + ... + S_l) + (R_{k+1} + ... + R_m),

an (m+1)-by-(n+1) integer table indexed from 0.  The companion table phi
certifies prefix covers: some class member has all its 1s inside the
first e rows and first f columns exactly when phi[e][f] == t[e][f].  The
two-cover analogue psi plays the same role for a pair of prefix covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import BadRange, DimensionTooSmall, EmptyClass, WeightMismatch
from .partition import Partition, is_nonempty


@dataclass(frozen=True)
class StructureTable:
    """An (m+1)-by-(n+1) integer table, kind "T" or "Phi"."""

    values: tuple[tuple[int, ...], ...]
    kind: str

    @property
    def m(self) -> int:
        return len(self.values) - 1

    @property
    def n(self) -> int:
        return len(self.values[0]) - 1

    def __getitem__(self, kl: tuple[int, int]) -> int:
        k, l = kl
        return self.values[k][l]

    def min_entry(self) -> int:
        return min(min(row) for row in self.values)

    def render(self) -> str:
        """Aligned grid with 0-based row and column headers."""
        width = max(
            max(len(str(v)) for row in self.values for v in row),
            len(str(self.n)),
        )
        header = "    " + " ".join(f"{j:>{width}}" for j in range(self.n + 1))
        lines = [header]
        for k, row in enumerate(self.values):
            lines.append(f"{k:>3} " + " ".join(f"{v:>{width}}" for v in row))
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {"kind": self.kind, "values": [list(row) for row in self.values]}


def _require_equal_weights(r: Partition, s: Partition) -> None:
    if r.weight != s.weight:
        raise WeightMismatch(f"weights differ: {r.weight} vs {s.weight}")


def _require_nonempty(r: Partition, s: Partition) -> None:
    if not is_nonempty(r, s):
        raise EmptyClass(f"no matrix has row sums {r.parts} and column sums {s.parts}")


@lru_cache(maxsize=None)
def _structure_values(r: Partition, s: Partition) -> tuple[tuple[int, ...], ...]:
    m, n = len(r), len(s)
    pref_s = [0] * (n + 1)
    for j, v in enumerate(s):
        pref_s[j + 1] = pref_s[j] + v
    suf_r = [0] * (m + 2)
    for i in range(m - 1, -1, -1):
        suf_r[i + 1] = suf_r[i + 2] + r[i]
    return tuple(
        tuple(k * l - pref_s[l] + suf_r[k + 1] for l in range(n + 1))
        for k in range(m + 1)
    )


def structure_matrix(r: Partition, s: Partition) -> StructureTable:
    """The structure matrix of the pair (r, s).

    Entry (k, l) counts k*l minus the first l column sums plus the last
    m-k row sums; every entry is nonnegative iff the class is nonempty.
    """
    _require_equal_weights(r, s)
    return StructureTable(values=_structure_values(r, s), kind="T")


def nonempty_by_structure(table: StructureTable) -> bool:
    """Ford-Fulkerson criterion: the class is nonempty iff no entry of the
    structure matrix is negative."""
    if table.kind != "T":
        raise ValueError("nonnegativity criterion applies to the structure matrix")
    return table.min_entry() >= 0


@lru_cache(maxsize=None)
def _phi_values(r: Partition, s: Partition) -> tuple[tuple[int, ...], ...]:
    t = _structure_values(r, s)
    m, n = len(r), len(s)
    rows = []
    for k in range(m + 1):
        row = []
        for l in range(n + 1):
            best = None
            for i1 in range(k + 1):
                # t[i1][l+j2] depends on j2 only through this row slice
                a_min = min(t[i1][l:])
                for j1 in range(l + 1):
                    base = a_min + (k - i1) * (l - j1)
                    b_min = min(t[k + i2][j1] for i2 in range(m - k + 1))
                    cand = base + b_min
                    if best is None or cand < best:
                        best = cand
            row.append(best)
        rows.append(tuple(row))
    return tuple(rows)


def phi_matrix(r: Partition, s: Partition) -> StructureTable:
    """The cover-certificate table phi.

    phi[k][l] = min{ t[i1][l+j2] + t[k+i2][j1] + (k-i1)(l-j1) } over all
    0 <= i1 <= k <= k+i2 <= m and 0 <= j1 <= l <= l+j2 <= n, minimized by
    direct enumeration.  Requires a nonempty class.
    """
    _require_equal_weights(r, s)
    _require_nonempty(r, s)
    return StructureTable(values=_phi_values(r, s), kind="Phi")


def cover_exists(r: Partition, s: Partition, e: int, f: int) -> bool:
    """True iff some class member has all its 1s inside the first e rows
    and first f columns, i.e. phi[e][f] == t[e][f]."""
    _require_equal_weights(r, s)
    _require_nonempty(r, s)
    m, n = len(r), len(s)
    if not (0 <= e <= m and 0 <= f <= n):
        raise BadRange(f"cover ({e},{f}) out of range for {m}x{n}")
    return _phi_values(r, s)[e][f] == _structure_values(r, s)[e][f]


def min_t_term_rank(r: Partition, s: Partition, t: int) -> tuple[int, tuple[int, int]]:
    """Minimum t-term rank over the class, with one witness (e, f).

    The value is min{ t*e + f } over all cells where phi and the
    structure matrix agree.  Ties break toward the smallest e, then the
    smallest f.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    _require_equal_weights(r, s)
    _require_nonempty(r, s)
    tv = _structure_values(r, s)
    pv = _phi_values(r, s)
    m, n = len(r), len(s)
    best: int | None = None
    witness: tuple[int, int] | None = None
    for e in range(m + 1):
        for f in range(n + 1):
            if pv[e][f] != tv[e][f]:
                continue
            value = t * e + f
            if best is None or value < best:
                best = value
                witness = (e, f)
    # the cell (m, n) always qualifies, so a minimum exists
    assert best is not None and witness is not None
    return best, witness


def psi(r: Partition, s: Partition, a: int, b: int, c: int, d: int) -> int:
    """The two-cover quantity psi_{a,b;c,d}.

    Minimum of

        t[i1][d+j3] + t[a+i2][c+j2] + t[b+i3][j1]
          + (a-i1)(d-c-j2) + (b-a-i2)(c-j1) + (a-i1)(c-j1)

    over 0 <= i1 <= a <= a+i2 <= b <= b+i3 <= m and
    0 <= j1 <= c <= c+j2 <= d <= d+j3 <= n, by direct enumeration.
    """
    _require_equal_weights(r, s)
    m, n = len(r), len(s)
    if not (0 <= a < b <= m):
        raise BadRange(f"need 0 <= a < b <= m, got a={a}, b={b}, m={m}")
    if not (0 <= c < d <= n):
        raise BadRange(f"need 0 <= c < d <= n, got c={c}, d={d}, n={n}")
    t = _structure_values(r, s)
    first_min = [min(t[i1][d:]) for i1 in range(a + 1)]  # best j3 per i1
    third_min = [min(t[b + i3][j1] for i3 in range(m - b + 1)) for j1 in range(c + 1)]
    best = None
    for i1 in range(a + 1):
        for i2 in range(b - a + 1):
            for j1 in range(c + 1):
                partial = (
                    first_min[i1]
                    + third_min[j1]
                    + (b - a - i2) * (c - j1)
                    + (a - i1) * (c - j1)
                )
                for j2 in range(d - c + 1):
                    cand = partial + t[a + i2][c + j2] + (a - i1) * (d - c - j2)
                    if best is None or cand < best:
                        best = cand
    assert best is not None
    return best


def two_cover_exists(
    r: Partition, s: Partition, e_prime: int, e: int, f: int, f_prime: int
) -> bool:
    """True iff some class member is simultaneously covered by its first e
    rows plus f columns and by its first e' rows plus f' columns
    (e' < e, f < f').  Criterion: psi_{e',e;f,f'} >= t[e][f] + t[e'][f']."""
    _require_equal_weights(r, s)
    _require_nonempty(r, s)
    t = _structure_values(r, s)
    value = psi(r, s, e_prime, e, f, f_prime)
    return value >= t[e][f] + t[e_prime][f_prime]


class UniformMinimizerHypotheses(NamedTuple):
    holds: bool
    f: int
    f_prime: int


def uniform_minimizer_hypotheses(
    r: Partition, s: Partition, t: int
) -> UniformMinimizerHypotheses:
    """Check the sufficient conditions under which a single class member
    realizing every minimum k-term rank for k = 1..t is guaranteed.

    Let f be the least column with phi[2][f] == t[2][f] and f' the least
    with phi[1][f'] == t[1][f'].  The conditions: 1 <= f < f' < n, the
    column sums from position f on are all 1, and each minimum k-term
    rank for k = 1..t equals k + f' or 2k + f.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    m, n = len(r), len(s)
    if m <= 2 or n <= 2:
        raise DimensionTooSmall("needs more than two rows and two columns")
    _require_equal_weights(r, s)
    _require_nonempty(r, s)
    tv = _structure_values(r, s)
    pv = _phi_values(r, s)
    f = next(l for l in range(n + 1) if pv[2][l] == tv[2][l])
    f_prime = next(l for l in range(n + 1) if pv[1][l] == tv[1][l])
    holds = 1 <= f < f_prime < n and s.part(f - 1) == 1
    if holds:
        for k in range(1, t + 1):
            value, _ = min_t_term_rank(r, s, k)
            if value not in (k + f_prime, 2 * k + f):
                holds = False
                break
    return UniformMinimizerHypotheses(holds=holds, f=f, f_prime=f_prime)

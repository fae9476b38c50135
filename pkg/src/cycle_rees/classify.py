"""Linear/fiber/neither classification and the structural invariants.

Per cell (n, t) the classifier computes the symmetric-algebra relations L,
the Rees ideal J (by elimination), the fiber relations H, and decides

    linear   J = L
    fiber    J = L + H T
    neither  otherwise

with an optional per-cell budget; cells that run out of budget are reported
as "timeout", never guessed.  The module also hosts the closed-form fiber
dimension, the circulant-rank cross-check, the Hilbert series closed forms,
the Gorenstein palindromy witness, and the Cohen-Macaulay type of the
Artinian reduction for odd n.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .groebner import Budget, BudgetExceeded, Ideal, buchberger, ideal_membership, normal_form
from .linalg import matrix_rank, sparse_rank
from .monomial_ideals import HilbertSeries, hilbert_numerator, initial_ideal, poly_mul_z
from .orders import OrderSpec, product_order
from .rees import PathIdealSpec, fiber_ideal, rees_ideal, sym_relations
from .rings import Polynomial, RingSpec


def fiber_dimension(n: int, t: int) -> int:
    """Krull dimension of the fiber cone: n - gcd(n, t) + 1."""
    PathIdealSpec(n, t)
    return n - gcd(n, t) + 1


def circulant_rank(n: int, t: int) -> int:
    """Exact rank of the circulant of the t-window indicator vector.

    Column j is the j-fold cyclic shift of (1,...,1,0,...,0) with t ones;
    this is the exponent matrix of the monomial map defining the fiber cone.
    """
    if n < 1 or not 1 <= t <= n:
        raise ValueError("need 1 <= t <= n")
    matrix = [[1 if (i - j) % n < t else 0 for j in range(n)] for i in range(n)]
    return matrix_rank(matrix)


@dataclass
class ClassRecord:
    """Outcome of classifying one (n, t) cell."""

    n: int
    t: int
    klass: str  # linear | fiber | neither | timeout
    gcd: int
    fiber_dim: int
    ms: dict[str, float] = field(default_factory=dict)
    witness: str | None = None

    def to_json(self, include_ms: bool = False) -> dict[str, object]:
        out: dict[str, object] = {
            "n": self.n,
            "t": self.t,
            "class": self.klass,
            "gcd": self.gcd,
            "fiber_dim": self.fiber_dim,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if include_ms:
            out["ms"] = {k: round(v, 3) for k, v in self.ms.items()}
        return out


def _extend_ideal(base: Ideal, extra: Ideal, ring: RingSpec) -> Ideal:
    gens = list(base.generators) + [g.extend_to(ring) for g in extra.generators]
    return Ideal(ring, gens)


def is_linear_type(n: int, t: int, budget: Budget | None = None) -> bool:
    """Whether the Rees ideal equals the symmetric-algebra relations."""
    spec = PathIdealSpec(n, t)
    L = sym_relations(spec)
    J = rees_ideal(spec, budget)
    return _ideals_equal(L, J, budget)


def is_fiber_type(n: int, t: int, budget: Budget | None = None) -> bool:
    """Whether the Rees ideal equals L + H T."""
    spec = PathIdealSpec(n, t)
    L = sym_relations(spec)
    J = rees_ideal(spec, budget)
    H = fiber_ideal(spec, budget, rees=J)
    LH = _extend_ideal(L, H, J.ring)
    return _ideals_equal(LH, J, budget)


def _ideals_equal(first: Ideal, second: Ideal, budget: Budget | None) -> bool:
    order = product_order(first.ring)
    return all(ideal_membership(g, second, order, budget) for g in first.generators) and all(
        ideal_membership(g, first, order, budget) for g in second.generators
    )


def classify(n: int, t: int, budget_secs: float | None = None) -> ClassRecord:
    """Full classification of one cell, with per-stage timings in ms."""
    spec = PathIdealSpec(n, t)
    d = spec.d
    record = ClassRecord(n=n, t=t, klass="timeout", gcd=d, fiber_dim=n - d + 1)
    budget = Budget(seconds=budget_secs) if budget_secs is not None else None
    try:
        t0 = time.perf_counter()
        L = sym_relations(spec)
        order = product_order(L.ring)
        L.groebner_basis(order, budget)
        t1 = time.perf_counter()
        record.ms["sym"] = (t1 - t0) * 1000
        J = rees_ideal(spec, budget)
        t2 = time.perf_counter()
        record.ms["rees"] = (t2 - t1) * 1000
        if _ideals_equal(L, J, budget):
            record.klass = "linear"
            record.ms["fiber"] = 0.0
            return record
        H = fiber_ideal(spec, budget, rees=J)
        t3 = time.perf_counter()
        record.ms["fiber"] = (t3 - t2) * 1000
        if H.is_zero_ideal():
            # H = 0 makes fiber type equivalent to linear type, already false
            record.klass = "neither"
            record.witness = _neither_witness(J, L, budget)
            return record
        LH = _extend_ideal(L, H, J.ring)
        if _ideals_equal(LH, J, budget):
            record.klass = "fiber"
        else:
            record.klass = "neither"
            record.witness = _neither_witness(J, LH, budget)
        return record
    except BudgetExceeded:
        record.klass = "timeout"
        return record


def _neither_witness(J: Ideal, smaller: Ideal, budget: Budget | None) -> str | None:
    """A generator of J outside the candidate ideal, as canonical text."""
    order = product_order(J.ring)
    for g in J.generators:
        if not ideal_membership(g, smaller, order, budget):
            return g.to_text()
    return None


def _classify_cell(args: tuple[int, int, float | None]) -> ClassRecord:
    n, t, budget_secs = args
    return classify(n, t, budget_secs)


def classification_table(
    n_min: int,
    n_max: int,
    budget_secs: float | None = None,
    jobs: int = 1,
) -> list[ClassRecord]:
    """Classify the full grid 1 <= t <= n-1 for n_min <= n <= n_max.

    Cells are independent; with jobs > 1 they run in a process pool and the
    results are merged in (n, t) order, so output is deterministic.
    """
    if not 3 <= n_min <= n_max:
        raise ValueError("need 3 <= n_min <= n_max")
    cells = [(n, t, budget_secs) for n in range(n_min, n_max + 1) for t in range(1, n)]
    if jobs <= 1:
        records = [_classify_cell(c) for c in cells]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_classify_cell, cells, chunksize=1))
    records.sort(key=lambda r: (r.n, r.t))
    return records


GLYPHS = {"linear": "L", "fiber": "F", "neither": "×", "timeout": "T"}


def render_table(records: list[ClassRecord]) -> str:
    """Text grid of class glyphs, rows indexed by n and columns by t."""
    if not records:
        return ""
    n_max = max(r.n for r in records)
    by_cell = {(r.n, r.t): r for r in records}
    width = 2
    header = "n\\t" + "".join(str(t).rjust(width + (1 if t >= 10 else 0)) for t in range(1, n_max))
    lines = [header]
    for n in sorted({r.n for r in records}):
        row = str(n).ljust(3)
        for t in range(1, n):
            rec = by_cell.get((n, t))
            glyph = GLYPHS[rec.klass] if rec else " "
            row += glyph.rjust(width + (1 if t >= 10 else 0))
        lines.append(row)
    return "\n".join(lines) + "\n"


# -- closed-form Hilbert series and its verification --


def _binomial_power(k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = [a + b for a, b in zip(out + [0], [0] + out)]
    return out


def hilbert_closed_form_n_minus_2(n: int) -> HilbertSeries:
    """Hilbert series of the Rees algebra at path length n-2, expanded.

    odd n = 2s+1:  (sum_{k<s} (1+z)^{2k+1} z^{s-1-k} + z^s) / (1-z)^{2s+2}
    even n = 2s:   (sum_{k<s} (1+z)^{2k}   z^{s-1-k})       / (1-z)^{2s+1}
    """
    if n < 3:
        raise ValueError("need n >= 3")
    s = n // 2
    num = [0]
    for k in range(s):
        power = 2 * k + 1 if n % 2 else 2 * k
        term = poly_mul_z(_binomial_power(power), [0] * (s - 1 - k) + [1])
        num = [a + b for a, b in zip(num + [0] * len(term), term + [0] * len(num))]
    if n % 2:
        while len(num) <= s:
            num.append(0)
        num[s] += 1
    while num and num[-1] == 0:
        num.pop()
    return HilbertSeries(tuple(num), n + 1).canonical()


def verify_hilbert(n: int, budget: Budget | None = None) -> bool:
    """Check the pivot-recursion series of in(J) against the closed form."""
    spec = PathIdealSpec(n, n - 2)
    J = rees_ideal(spec, budget)
    K = initial_ideal(J, product_order(J.ring), budget)
    return hilbert_numerator(K) == hilbert_closed_form_n_minus_2(n)


def gorenstein_witness(n: int) -> bool:
    """Palindromy of the Hilbert numerator (Stanley's criterion for domains).

    True for every even n; odd n comes out False and serves as the negative
    control.
    """
    return hilbert_closed_form_n_minus_2(n).is_palindromic()


# -- Cohen-Macaulay type for odd n via the Artinian reduction --


def artinian_reduction_ideal(n: int) -> tuple[RingSpec, OrderSpec, list[Polynomial]]:
    """The ideal presenting the Artinian reduction of the Rees algebra, odd n.

    In K[x1..x_{n-1}] under lex x1 > ... > x_{n-1}:
    (x_i^2 - x_{i+1}x_{i+2} for i <= n-3, x_{n-2}^2, x_{n-1}^2, x_1 x_2).
    """
    ring = RingSpec((("X", tuple(f"x{i}" for i in range(1, n))),))
    order = OrderSpec(((("X",), "lex"),))

    def mono(parts: dict[str, int]) -> Polynomial:
        exps = [0] * ring.nvars
        for name, e in parts.items():
            exps[ring.var_index[name]] += e
        return Polynomial.monomial(ring, tuple(exps))

    gens = [mono({f"x{i}": 2}) - mono({f"x{i+1}": 1, f"x{i+2}": 1}) for i in range(1, n - 2)]
    gens.append(mono({f"x{n-2}": 2}))
    gens.append(mono({f"x{n-1}": 2}))
    gens.append(mono({"x1": 1, "x2": 1}))
    return ring, order, gens


def cm_type_odd(n: int, budget: Budget | None = None) -> int:
    """Socle dimension of the Artinian reduction, i.e. the CM type, odd n."""
    if n < 3 or n % 2 == 0:
        raise ValueError("need odd n >= 3")
    ring, order, gens = artinian_reduction_ideal(n)
    gb = buchberger(gens, order, budget)
    key = order.key_function(ring)
    leads = [max(g.monomials(), key=key) for g in gb]

    caps = [0] * ring.nvars
    for lead in leads:
        support = [i for i, e in enumerate(lead) if e]
        if len(support) == 1:
            i = support[0]
            caps[i] = lead[i] if caps[i] == 0 else min(caps[i], lead[i])
    if any(c == 0 for c in caps):
        raise ArithmeticError("quotient is not Artinian; construction bug")

    def divisible(m: tuple[int, ...]) -> bool:
        return any(all(l <= e for l, e in zip(lead, m)) for lead in leads)

    standard: list[tuple[int, ...]] = []
    stack: list[tuple[int, ...]] = [(0,) * ring.nvars]
    seen = {stack[0]}
    while stack:
        m = stack.pop()
        standard.append(m)
        for i in range(ring.nvars):
            if m[i] + 1 < caps[i]:
                nxt = m[:i] + (m[i] + 1,) + m[i + 1 :]
                if nxt not in seen and not divisible(nxt):
                    seen.add(nxt)
                    stack.append(nxt)
    standard.sort(key=lambda m: (sum(m), m))
    index = {m: c for c, m in enumerate(standard)}
    size = len(standard)

    rows = []
    for col, b in enumerate(standard):
        row: dict[int, Fraction] = {}
        for i in range(ring.nvars):
            shifted = b[:i] + (b[i] + 1,) + b[i + 1 :]
            nf = normal_form(Polynomial.monomial(ring, shifted), gb, order, budget)
            for exps, coeff in nf.items():
                row[i * size + index[exps]] = coeff
        denom = 1
        for v in row.values():
            denom = denom * v.denominator // gcd(denom, v.denominator)
        rows.append({c: int(v * denom) for c, v in row.items()})
    return size - sparse_rank(rows)


# -- cross-checks from the literature on linear type of cycle path ideals --


def known_linear(n: int, t: int) -> bool:
    """Cases known to be of linear type: t in {1, n-1}, odd n with t in
    {2, n-2, (n-1)/2}."""
    if t in (1, n - 1):
        return True
    if n % 2 == 1 and t in (2, n - 2, (n - 1) // 2):
        return True
    return False


def known_not_linear(n: int, t: int) -> bool:
    """Cases known to fail linear type (items (3)-(6) of the background list)."""
    if gcd(n, t) > 1:
        return True
    half = (n - 1) // 2
    if half < t <= n - 3:
        return True
    if 1 < t <= half:
        l = pow(t, -1, n)
        if 1 < l <= half:
            return True
        if half < l < n and (n - l) >= 1 and n % (n - l) >= 2:
            return True
    return False


def conjecture_fiber_iff_divides(records: list[ClassRecord]) -> list[tuple[int, int, bool]]:
    """Consistency report for: strictly between 2 and floor(n/2), fiber-not-
    linear holds exactly when t divides n.  Timeout cells are skipped."""
    report = []
    for r in records:
        if 2 < r.t < r.n // 2 and r.klass != "timeout":
            expected_fiber = r.n % r.t == 0
            report.append((r.n, r.t, (r.klass == "fiber") == expected_fiber))
    return report

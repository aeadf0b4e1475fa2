"""Instance discovery for the theorem audits.

Every S-quasigroup with a two-element designated subgroup is isomorphic to one
whose subgroup is ``{0, 1}`` with identity ``0``, and all conditions in both
theorems are invariant under relabelling U and V simultaneously.  So U ranges
over Latin squares whose top-left block is ``[[0, 1], [1, 0]]``, which is
exhaustive up to isomorphism.  Subquasigroups of a quasigroup of order ``n``
have order at most ``n / 2``, so at orders up to 5 two-element subgroups are
the only candidates.

Partners V are generated from the pairing condition at β = I: it forces
V = isotope of U under (δ⁻¹, γ⁻¹, δ⁻¹) with δ, γ in AUM(V).  Rewritten in U,
that needs (δ, γδγ⁻¹, δ) and (δγδ⁻¹, γ, δγδ⁻¹) in AUT(U), so candidates come
from the (small) autotopism group of U.  Pairs that fail the pairing
condition at β = I cannot satisfy it for all β and are not generated.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Iterator

from .morphisms import Isotopism, apply_isotopism, autotopism_set
from .perm import Perm
from .substructure import SPair, make_spair, smarandache_subsets
from .tables import CayleyTable, classify
from .theorems import TheoremReport, verify_theorem_31, verify_theorem_32

log = logging.getLogger(__name__)

Z2_BLOCK = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0}


def latin_squares(n: int, prefix: dict[tuple[int, int], int] | None = None,
                  rng: random.Random | None = None) -> Iterator[CayleyTable]:
    """All Latin squares of order ``n`` agreeing with ``prefix``.

    Cells are filled row-major; with ``rng`` the symbol order is shuffled at
    each cell (used for sampling, not for exhaustive runs).
    """
    prefix = prefix or {}
    grid = [[-1] * n for _ in range(n)]
    row_used = [set() for _ in range(n)]
    col_used = [set() for _ in range(n)]
    for (r, c), v in prefix.items():
        if v in row_used[r] or v in col_used[c]:
            return
        grid[r][c] = v
        row_used[r].add(v)
        col_used[c].add(v)
    cells = [(r, c) for r in range(n) for c in range(n) if (r, c) not in prefix]

    def fill(k):
        if k == len(cells):
            yield CayleyTable(tuple(tuple(row) for row in grid))
            return
        r, c = cells[k]
        symbols = list(range(n))
        if rng is not None:
            rng.shuffle(symbols)
        for v in symbols:
            if v in row_used[r] or v in col_used[c]:
                continue
            grid[r][c] = v
            row_used[r].add(v)
            col_used[c].add(v)
            yield from fill(k + 1)
            row_used[r].discard(v)
            col_used[c].discard(v)
        grid[r][c] = -1

    yield from fill(0)


def normalized_s_quasigroups(n: int) -> Iterator[SPair]:
    """S-quasigroups of order ``n`` with designated subgroup ``{0, 1}`` (identity 0)."""
    if n < 4:
        return
    for t in latin_squares(n, Z2_BLOCK):
        yield make_spair(t, (0, 1))


def random_latin_square(n: int, rng: random.Random, prefix=None) -> CayleyTable:
    return next(latin_squares(n, prefix, rng))


def sample_s_quasigroups(n: int, count: int, seed: int = 0) -> list[SPair]:
    """Seeded sample of S-quasigroups carrying the normalized Z2 block."""
    rng = random.Random(seed)
    return [make_spair(random_latin_square(n, rng, Z2_BLOCK), (0, 1)) for _ in range(count)]


def pairing_partners(u: SPair) -> list[SPair]:
    """Every SPair V for which some δ, γ in SAUM(V) satisfy the pairing
    condition at β = I, sorted by (table rows, subset)."""
    aut = autotopism_set(u.table)
    shaped = [t for t in aut if t.U == t.W]
    by_table: dict[CayleyTable, list[tuple[Perm, Perm]]] = {}
    for t1 in shaped:
        delta = t1.U
        for t2 in shaped:
            gamma = t2.V
            if t2.U != gamma.conjugate_by(delta.inverse()):
                continue
            if t1.V != delta.conjugate_by(gamma.inverse()):
                continue
            iso = Isotopism(delta.inverse(), gamma.inverse(), delta.inverse())
            v_table = apply_isotopism(u.table, iso.inverse())
            by_table.setdefault(v_table, []).append((delta, gamma))
    out = []
    for v_table, gens in by_table.items():
        for sub in smarandache_subsets(v_table):
            if any(d.preserves(sub.elements) and g.preserves(sub.elements) for d, g in gens):
                out.append(make_spair(v_table, sub.elements))
    out.sort(key=lambda p: (p.table.rows, p.subset))
    return out


@dataclass
class SweepCase:
    u: SPair
    v: SPair
    report: TheoremReport

    @property
    def pairing_all(self) -> bool:
        return bool(self.report.conclusion and self.report.conclusion["pairing_all_beta"])

    @property
    def fully_hypothesized(self) -> bool:
        """Conjugate, non-trivial SAGs and pairing for every β."""
        return (
            self.report.hypothesis_ok
            and self.report.hypothesis["saums_nontrivial"]
            and self.pairing_all
        )


def sweep_pairing_theorem(orders=(2, 3, 4, 5), sample_order6: int = 0, seed: int = 0,
                          corollaries: bool = False) -> list[SweepCase]:
    """Run the pairing-theorem audit on every (U, V) the generator yields.

    Only pairs satisfying the conjugacy hypothesis are returned.
    ``sample_order6`` adds that many seeded random order-6 U's.
    """
    us: list[SPair] = []
    for n in orders:
        us.extend(normalized_s_quasigroups(n))
    if sample_order6:
        us.extend(sample_s_quasigroups(6, sample_order6, seed))
    cases = []
    for u in us:
        for v in pairing_partners(u):
            report = verify_theorem_31(u, v, corollaries=corollaries)
            if report.hypothesis_ok:
                cases.append(SweepCase(u, v, report))
    log.info("pairing sweep: %d U's, %d hypothesis-satisfying pairs", len(us), len(cases))
    return cases


def sweep_variety_theorem(cases: list[SweepCase]) -> list[tuple[SweepCase, TheoremReport]]:
    """Variety-theorem audits for every (U, β, γ, δ) whose pairing holds for all β.

    Cases with trivial SAUMs are included: there the only witness is the
    identity triple and the comparison is U against itself.  Each distinct
    (U, β, γ, δ) is audited once.
    """
    out = []
    seen = set()
    for case in cases:
        if not case.pairing_all:
            continue
        for w in case.report.witnesses:
            key = (case.u.table, case.u.subset, w.beta, w.gamma, w.delta)
            if key in seen:
                continue
            seen.add(key)
            out.append((case, verify_theorem_32(case.u, w.beta, w.gamma, w.delta)))
    return out


def variety_agreement(report: TheoremReport) -> bool:
    """Whether U and its special-triple isotope get equal S-variety verdicts."""
    rows = report.observations.get("s_varieties")
    return rows is not None and all(r["agree"] for r in rows.values())


def is_quasigroup_pair(u: SPair, v: SPair) -> bool:
    return classify(u.table).is_quasigroup and classify(v.table).is_quasigroup

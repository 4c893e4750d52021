"""Pin f(k, N) by combining bounds, constructions and the exact clique solver."""

from __future__ import annotations

import time
from math import comb
from pathlib import Path

from .bounds import DEFAULT_RAMSEY_THRESHOLD, BoundReport, report
from .clique import EXACT, CliqueResult, max_clique
from .graph import build_xor_product, clique_to_family, family_to_clique, vertex_cap


def solve_f(k: int, N: int, time_limit: float | None = None, thread_count: int = 1,
            ramsey_threshold: int = DEFAULT_RAMSEY_THRESHOLD, cap: int | None = None,
            force_solver: bool = False, export_dimacs: str | Path | None = None) -> BoundReport:
    """Bound report for (k, N), tightened by a clique search when the product graph fits.

    The search is seeded with the best construction and stopped at the smallest
    upper bound.  When the bounds already meet, the search is skipped unless
    ``force_solver`` is set; ``report.clique`` then carries the construction as
    its witness.
    """
    t0 = time.monotonic()
    rep = report(k, N, ramsey_threshold, witness=True)
    fits = comb(N, k) ** 2 <= (vertex_cap() if cap is None else cap)

    if rep.exact is not None and not force_solver and export_dimacs is None:
        fam = rep.witness
        rep.clique = CliqueResult(len(fam), family_to_clique(fam), EXACT, 0,
                                  (time.monotonic() - t0) * 1000, family=fam)
        return rep
    if not fits:
        return rep

    g = build_xor_product(N, k, cap=cap)
    if export_dimacs is not None:
        g.write_dimacs(export_dimacs, comment=f"Xor product of KG({N},{k}) with itself")
    seed = family_to_clique(rep.witness, g)
    res = max_clique(g, time_limit=time_limit, seed_clique=seed, thread_count=thread_count,
                     upper_bound=rep.upper.value)
    res.family = clique_to_family(g, res.witness, provenance=f"solver(k={k},N={N})")
    if res.size > rep.lower:
        rep.lower = res.size
        rep.lower_provenance = res.family.provenance
        rep.witness = res.family
    if res.status == EXACT:
        rep.exact = res.size
    rep.clique = res
    return rep

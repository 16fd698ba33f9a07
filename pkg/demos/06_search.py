"""
Exhaustive search over q-systems
================================

Every n-dim subspace of F_q^{mk} is a candidate q-system.  The search
tallies rank-weight supports and flags antipodal two-weight codes.
"""

# %%
from collections import Counter

from atwrank.search import SearchJob, run_search

job = SearchJob(2, 4, 4, 2)
out = list(run_search(job))
summary = out[-1]
print(summary["visited"], summary["atw"], summary["supports"])

# %%
# The minimum distance of the ATW findings.
print(Counter(r["d"] for r in out[:-1] if r["atw"]))

# %%
# Three-dimensional codes of this size have no ATW members at all.
summary = list(run_search(SearchJob(2, 3, 3, 3, atw_only=True)))[-1]
print(summary["visited"], summary["atw"])

"""
Separability conditions on rings and posets
===========================================

Each condition is computed independently; on any subject they agree.
"""

from finspec.theorems import corollary9_check, run_corpus, theorem2_report
from finspec.expr import build_ring
from finspec.topology import antichain, chain

for subject in [build_ring("Z/12"), build_ring("Z/4[x]/(x^2)"), chain(2), chain(3), antichain(3)]:
    print(theorem2_report(subject).to_text())
    print("  zariski == flat, all maximal:", corollary9_check(subject))

# the whole default corpus
report = run_corpus()
print(report.to_text().splitlines()[-1])

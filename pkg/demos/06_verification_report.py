"""Reproducible reports contrasting the ring families.

Rings with an unending irreducible stream show only height-2 maximal
ideals; the others exhibit a height-1 maximal ideal meeting A in zero.
The same report is available from ``krull verify --format json``.
"""

from krull.lab import verify_theorem
from krull.rings import QQ, ZZ, ZZ_I, GF_t, Zloc

for R in (ZZ, ZZ_I, GF_t(5), Zloc(2), Zloc(5), QQ):
    report = verify_theorem(R, budget=50, samples=30, lemma1_trials=20, seed=42)
    print(report.to_text())
    print()

print(verify_theorem(Zloc(3), budget=5, samples=2, lemma1_trials=2, seed=0).to_json())

"""Sweeping the coupling strength of the synthetic corpus generator.

The generator partitions words and references into topic pools that drift
from year to year.  Each document either samples its words and references
from a single topic (probability kappa) or independently.  Within a year,
coupling makes words and references mutually informative; across the
two-year analysis window, the drift makes those associations clash.  The
result is an increasingly negative mu* as kappa rises, which is the
signature the yearly series is built to detect.

The command line equivalent:

    rfa simulate --years 4 --docs-per-year 1200 --kappa 0.6 --out synth.tsv
    rfa analyze --in synth.tsv --out series.csv

Run:  python3 demos/04_synthetic_sweep.py   (about ten seconds)
"""

from rfa import SynthConfig, build_vocab, generate, mu_star_series

YEARS = 4
DOCS = 1200

print(f"{DOCS} docs/year over {YEARS} years, default universe sizes\n")
print("kappa   mu* per window (later year of each two-year window)")
for kappa in (0.0, 0.3, 0.6, 0.9):
    corpus = generate(
        SynthConfig(years=YEARS, docs_per_year=DOCS, kappa=kappa, seed=7)
    )
    words, refs = build_vocab(corpus)  # default df thresholds (10, 10)
    points = mu_star_series(corpus, words, refs)
    cells = "  ".join(f"{p.year}: {p.mu_star:+.4f}" for p in points)
    print(f" {kappa:.1f}    {cells}")

print(
    "\nkappa = 0 sits near zero (small negative plug-in bias); raising the"
    "\ncoupling drives every window's mu* further below zero."
)

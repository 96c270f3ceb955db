"""Reading a tagged bibliographic export and writing the canonical TSV.

Export records carry two-letter field tags in columns 1-2, continuation
lines indented by three spaces, and an ER terminator per record.  Only
TI, PY, CR and UT matter here; blocks missing a year or title are counted
and skipped rather than aborting the run.

The command line equivalent of this script:

    rfa ingest --format wos --in export.txt --out corpus.tsv

Run:  python3 demos/03_tagged_export.py
"""

from rfa import SkipReport, parse_wos, write_canonical

EXPORT = b"""FN Clarivate Analytics Web of Science
VR 1.0
PT J
AU IIJIMA S
TI HELICAL MICROTUBULES OF GRAPHITIC
   CARBON
SO NATURE
PY 1991
CR BACON R, 1960, J APPL PHYS, V31, P283
   RADUSHKEVICH LV, 1952, ZURN FISIC CHIM, V26, P88
UT WOS:A1991GM51600001
ER

PT J
TI LARGE-SCALE SYNTHESIS OF CARBON NANOTUBES
PY 1992
CR IIJIMA S, 1991, NATURE, V354, P56
ER

PT J
TI A RECORD WITHOUT A PUBLICATION YEAR
CR NOBODY A, 1990, NOWHERE, V1, P1
ER
EF
"""

report = SkipReport()
corpus = parse_wos(EXPORT, report)

print(f"parsed {len(corpus)} records, years {corpus.year_range}")
for rec in corpus:
    print(f"  {rec.id}: ({rec.year}) {rec.title!r}, {len(rec.cited_refs)} refs")
if report.skipped:
    print(report.format())

# the canonical TSV is the storage format everything downstream reads;
# it round-trips the kept fields byte for byte
print("\ncanonical TSV:")
print(write_canonical(corpus), end="")

"""Titles and cited references on their way into the contingency tensor.

A title contributes a *set* of stems: lowercase alphanumeric tokens, minus
stopwords, run through the Porter stemmer.  A reference list contributes a
set of normalized keys.  Both are sets per document, so repetition inside
one record never inflates counts.

Run:  python3 demos/02_text_pipeline.py
"""

from rfa import normalize_reference, porter_stem, title_to_tokenset, tokenize
from rfa.textpipe import default_stopwords, remove_stopwords

titles = [
    "Networks of scientific papers",
    "The Structure of Scientific Revolutions",
    "C60: Buckminsterfullerene",
    "Single-walled carbon nanotubes (1993)",
    "citation analysis of citations",
]

print("title -> tokens -> kept -> stems")
for title in titles:
    tokens = tokenize(title)
    kept = remove_stopwords(tokens)
    stems = title_to_tokenset(title)
    print(f"  {title!r}")
    print(f"    tokens {tokens}")
    print(f"    kept   {kept}")
    print(f"    stems  {sorted(stems)}")

# stemming conflates inflectional families; the stemmer is the 1980
# suffix-stripping algorithm (Porter), not a dictionary lookup
print("\nstem families:")
for word in ("citation", "citations", "cited", "citing"):
    print(f"  {word:10s} -> {porter_stem(word)}")

# reference strings vary in whitespace, case, trailing punctuation;
# normalization collapses exactly those variations and nothing more
print("\nreference keys:")
variants = [
    "Kroto HW, 1985, NATURE, V318, P162",
    "KROTO   HW, 1985, nature, V318, P162.",
    "kroto hw, 1985, Nature, v318, p162 ,",
]
for raw in variants:
    print(f"  {raw!r:50s} -> {normalize_reference(raw)!r}")

print(f"\nbundled stopword list: {len(default_stopwords())} function words")

"""Research-front activity from bibliographic document sets.

The indicator is the configurational information (three-way interaction
information, in bits) among title words, cited references and the two
slices of a sliding year window.  Negative values signal that the year
dimension mediates the word-reference coupling: the vocabulary-to-
literature mapping is being reorganized, the signature of an active
research front.  Positive values signal redundancy (stable fields);
values near zero, no three-way structure.

Pipeline: ingest records (tagged exports or canonical TSV), normalize
references, stem title words, threshold both vocabularies by document
frequency, count (stem, reference, slice) co-occurrences per window, and
evaluate the entropy decomposition per year.  A synthetic generator
produces corpora with a dialable coupling strength for validation.
"""

from .infodyn import (
    SERIES_CSV_HEADER,
    SeriesPoint,
    TriDecomposition,
    conditional_transmission,
    configurational_information,
    entropy,
    mu_star_series,
    transmission,
    write_series_csv,
)
from .ingest import (
    Corpus,
    DocumentRecord,
    ParseError,
    SkipReport,
    merge_corpora,
    normalize_reference,
    parse_canonical,
    parse_wos,
    write_canonical,
)
from .porter import porter_stem
from .synth import SynthConfig, SynthConfigError, generate
from .tensor import (
    EmptyWindowError,
    JointDistribution,
    SparseTensor3,
    build_window_tensor,
    dump_tensor_tsv,
    marginalize,
)
from .textpipe import (
    TokenSet,
    default_stopwords,
    load_stopwords,
    remove_stopwords,
    title_to_tokenset,
    tokenize,
)
from .vocab import VocabError, VocabIndex, build_vocab, document_terms, dump_vocab_tsv

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "DocumentRecord",
    "EmptyWindowError",
    "JointDistribution",
    "ParseError",
    "SERIES_CSV_HEADER",
    "SeriesPoint",
    "SkipReport",
    "SparseTensor3",
    "SynthConfig",
    "SynthConfigError",
    "TokenSet",
    "TriDecomposition",
    "VocabError",
    "VocabIndex",
    "__version__",
    "build_vocab",
    "build_window_tensor",
    "conditional_transmission",
    "configurational_information",
    "default_stopwords",
    "document_terms",
    "dump_tensor_tsv",
    "dump_vocab_tsv",
    "entropy",
    "generate",
    "load_stopwords",
    "marginalize",
    "merge_corpora",
    "mu_star_series",
    "normalize_reference",
    "parse_canonical",
    "parse_wos",
    "porter_stem",
    "remove_stopwords",
    "title_to_tokenset",
    "tokenize",
    "transmission",
    "write_canonical",
    "write_series_csv",
]

"""Command line interface: ``rfa ingest | analyze | simulate``.

Exit codes: 0 success, 1 data error (unparseable input, thresholds that
eliminate everything, windowing failures), 2 usage or configuration error
(bad flags, missing files, invalid parameter values).  ``RFA_THREADS``
caps worker threads for the analysis stage; 0 or unset picks a small
default, and results are byte-identical for any setting.
"""

import argparse
import os
import sys

from .infodyn import mu_star_series, write_series_csv
from .ingest import Corpus, ParseError, SkipReport, merge_corpora, parse_canonical, parse_wos, write_canonical
from .synth import SynthConfig, SynthConfigError, generate
from .tensor import EmptyWindowError, build_window_tensor, dump_tensor_tsv
from .textpipe import load_stopwords
from .vocab import VocabError, build_vocab, dump_vocab_tsv


class ConfigError(Exception):
    """A bad setting outside argparse's reach (environment, file refs)."""


def _kappa(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"kappa must be a number, got {text!r}")
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"kappa must lie in [0, 1], got {text}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _thread_cap() -> int | None:
    raw = os.environ.get("RFA_THREADS", "").strip()
    if not raw:
        return None
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"RFA_THREADS must be an integer, got {raw!r}")
    if n < 0:
        raise ConfigError(f"RFA_THREADS must be >= 0, got {n}")
    return n or None


def _read_corpus(paths: list[str], fmt: str, report: SkipReport) -> Corpus:
    if fmt == "wos":
        # inputs are concatenated and parsed as one stream, so synthesized
        # rec{N} ids stay unique across files
        blobs = []
        for path in paths:
            with open(path, "rb") as f:
                blobs.append(f.read())
        return parse_wos(b"\n".join(blobs), report)
    parts = []
    for path in paths:
        with open(path, "rb") as f:
            parts.append(parse_canonical(f.read()))
    return merge_corpora(parts)


def _cmd_ingest(args: argparse.Namespace) -> int:
    report = SkipReport()
    corpus = _read_corpus(args.inputs, args.format, report)
    with open(args.out, "w", encoding="utf-8", newline="\n") as f:
        f.write(write_canonical(corpus))
    if report.skipped:
        print(report.format(), file=sys.stderr)
    print(f"wrote {len(corpus)} records to {args.out}")
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    threads = _thread_cap()
    stopwords = load_stopwords(args.stopwords) if args.stopwords else None
    report = SkipReport()
    corpus = _read_corpus(args.inputs, args.format, report)
    if report.skipped:
        print(report.format(), file=sys.stderr)
    words, refs = build_vocab(corpus, args.word_min_df, args.ref_min_df, stopwords)
    points = mu_star_series(corpus, words, refs, stopwords, max_workers=threads)
    with open(args.out, "w", encoding="utf-8", newline="\n") as f:
        f.write(write_series_csv(points))
    if args.dump_vocab:
        with open(args.dump_vocab, "w", encoding="utf-8", newline="\n") as f:
            f.write(dump_vocab_tsv(words, refs))
    if args.dump_tensor_year:
        year_text, path = args.dump_tensor_year
        try:
            year = int(year_text)
        except ValueError:
            raise ConfigError(f"--dump-tensor-year expects a year, got {year_text!r}")
        if not any(p.year == year for p in points):
            span = corpus.year_range
            raise ConfigError(
                f"no window ends in {year}; windows cover {span[0] + 1}-{span[1]}"
            )
        tensor = build_window_tensor(corpus, words, refs, year - 1, year, stopwords)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(dump_tensor_tsv(tensor))
    gaps = sum(1 for p in points if p.empty)
    span = corpus.year_range
    print(
        f"years {span[0]}-{span[1]}: {len(points)} windows ({gaps} empty), "
        f"{len(corpus)} documents, {len(words)} words x {len(refs)} references retained"
    )
    print(
        f"tokens: {words.raw_tokens} raw, {words.unstopped_tokens} after stopwords, "
        f"{words.seen_terms} distinct stems, {len(words)} past threshold; "
        f"references: {refs.seen_terms} distinct, {len(refs)} past threshold"
    )
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    config = SynthConfig(
        years=args.years,
        docs_per_year=args.docs_per_year,
        growth=args.growth,
        n_words=args.n_words,
        n_refs=args.n_refs,
        n_topics=args.n_topics,
        kappa=args.kappa,
        words_per_doc=args.words_per_doc,
        refs_per_doc=args.refs_per_doc,
        seed=args.seed,
    )
    corpus = generate(config)
    with open(args.out, "w", encoding="utf-8", newline="\n") as f:
        f.write(write_canonical(corpus))
    span = corpus.year_range
    print(f"wrote {len(corpus)} records ({span[0]}-{span[1]}) to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rfa",
        description="Research-front activity: windowed three-way information over words, references and years.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="convert exports to the canonical TSV")
    p_ingest.add_argument("--format", choices=("wos", "canonical"), default="wos")
    p_ingest.add_argument("--in", dest="inputs", nargs="+", required=True, metavar="FILE")
    p_ingest.add_argument("--out", required=True, metavar="FILE")
    p_ingest.set_defaults(func=_cmd_ingest)

    p_an = sub.add_parser("analyze", help="compute the yearly indicator series")
    p_an.add_argument("--format", choices=("canonical", "wos"), default="canonical")
    p_an.add_argument("--in", dest="inputs", nargs="+", required=True, metavar="FILE")
    p_an.add_argument("--out", required=True, metavar="FILE")
    p_an.add_argument("--word-min-df", type=_positive_int, default=10,
                      help="keep stems appearing in at least this many documents (default 10)")
    p_an.add_argument("--ref-min-df", type=_positive_int, default=10,
                      help="keep references cited by at least this many documents (default 10)")
    p_an.add_argument("--stopwords", metavar="FILE",
                      help="override the bundled stopword list")
    p_an.add_argument("--count-mode", choices=("pairs", "binary"), default="pairs",
                      help="binary caps a document's contribution per cell at 1; "
                           "identical to pairs for set-based titles")
    p_an.add_argument("--dump-vocab", metavar="FILE")
    p_an.add_argument("--dump-tensor-year", nargs=2, metavar=("YEAR", "FILE"))
    p_an.set_defaults(func=_cmd_analyze)

    p_sim = sub.add_parser("simulate", help="generate a synthetic canonical TSV")
    p_sim.add_argument("--years", type=_positive_int, default=20)
    p_sim.add_argument("--docs-per-year", type=_positive_int, default=500)
    p_sim.add_argument("--growth", type=float, default=1.0)
    p_sim.add_argument("--kappa", type=_kappa, default=0.5)
    p_sim.add_argument("--seed", type=int, default=42)
    p_sim.add_argument("--n-words", type=_positive_int, default=120)
    p_sim.add_argument("--n-refs", type=_positive_int, default=120)
    p_sim.add_argument("--n-topics", type=_positive_int, default=6)
    p_sim.add_argument("--words-per-doc", type=_positive_int, default=6)
    p_sim.add_argument("--refs-per-doc", type=_positive_int, default=8)
    p_sim.add_argument("--out", required=True, metavar="FILE")
    p_sim.set_defaults(func=_cmd_simulate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return 2
    except (ConfigError, SynthConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, VocabError, EmptyWindowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Raw e-text ingestion: boilerplate stripping, tokenization, tagging."""

__version__ = "0.1.0"

from .boilerplate import strip_boilerplate
from .errors import IngestError, TaggerUnavailable, UnreadableSource
from .pipeline import IngestJob, ingest
from .tagger import BuiltinTagger, NltkTagger, make_tagger
from .tokenizer import split_sentences, tokenize

__all__ = [
    "BuiltinTagger",
    "IngestError",
    "IngestJob",
    "NltkTagger",
    "TaggerUnavailable",
    "UnreadableSource",
    "ingest",
    "make_tagger",
    "split_sentences",
    "strip_boilerplate",
    "tokenize",
]

class IngestError(Exception):
    """Base class for ingest failures."""


class UnreadableSource(IngestError):
    """The source file is missing or not decodable as text."""


class TaggerUnavailable(IngestError):
    """The requested POS tagger backend cannot be loaded."""

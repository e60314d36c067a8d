"""Exception hierarchy shared across the pipeline."""


class DocCloudError(Exception):
    """Base class for all doccloud errors."""


class CorpusError(DocCloudError):
    """A corpus root is missing or otherwise unusable."""


class EmptyCorpusError(CorpusError):
    """Scanning matched zero files."""


class ConfigError(DocCloudError):
    """A configuration input (lexicon, stopword file, ...) is unusable."""


class LexiconFormatError(ConfigError):
    """A lexicon file line does not parse; carries the offending line number."""

    def __init__(self, path, line_no, reason):
        super().__init__(f"{path}:{line_no}: {reason}")
        self.path = path
        self.line_no = line_no

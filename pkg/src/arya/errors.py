"""Exception types shared across the toolkit.

Plain precondition violations (bad argument values) raise the built-in
``ValueError``; the classes here mark failure modes a caller may want to
catch and handle separately. Everything derives from :class:`AryaError`,
which the CLI maps to exit code 1.
"""


class AryaError(Exception):
    """Base class for domain errors raised by this package."""


class UnsupportedScriptError(AryaError):
    """A script outside the offset-mappable Brahmic set was requested."""


class CacheCorruptionError(AryaError):
    """A tokenization cache entry does not match its recorded digest."""


class CheckpointMismatchError(AryaError):
    """A checkpoint's configuration digest differs from the active run."""


class DatasetFormatError(AryaError):
    """A task data file is malformed; message carries file and line number."""


class IncompatibleTaskError(AryaError):
    """Per-language datasets disagree on task name or label set."""


class ReplayLookupError(AryaError):
    """A replay evaluator was queried for an unknown language set."""


class ConfigError(AryaError):
    """A run configuration value is missing or out of range."""

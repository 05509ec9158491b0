"""lexipipe: readability-targeted summarization pipeline and evaluation harness."""

__version__ = "0.1.0"

SCHEMA_VERSION = "lexipipe/1"

from .adapter import (
    AdapterError,
    RawSentence,
    instantiate_templates,
    load_parser,
    parse_to_conllu,
    pinned_model,
)

__version__ = "0.1.0"

__all__ = [
    "AdapterError",
    "RawSentence",
    "instantiate_templates",
    "load_parser",
    "parse_to_conllu",
    "pinned_model",
    "__version__",
]

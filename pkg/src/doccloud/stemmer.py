"""Reduce word tokens to their roots via ordered suffix-detachment rules.

The ruleset is a small, deterministic stand-in for a dictionary-backed
lemmatizer: an ordered list of (suffix, replacement) pairs where the first
applicable rule wins, an exception lexicon consulted before any rule, and
a guard set of word endings exempt from the bare-"s" rule (so "class",
"status" and "this" survive a second pass unchanged).

Deliberate simplifications:

- Words of length <= 2 bypass stemming entirely (prevents "as" -> "a").
- A rule never applies more than once per word.
- A rule whose application would empty the word is skipped.
- Rule output may be a truncation rather than a dictionary word
  ("parsing" -> "pars"); the bundled exception lexicon records the
  corrections that matter for real documentation corpora.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from importlib import resources
from typing import Mapping

from doccloud._accel import speedups
from doccloud.errors import ConfigError, LexiconFormatError

__all__ = ["StemRuleSet", "default_ruleset", "stem", "stem_many", "load_exceptions"]

logger = logging.getLogger(__name__)

# Words at or below this length are returned unchanged.
SHORT_WORD_LEN = 2

# First match wins; "ed" and "es" keep the final "e" of e-final stems
# (combined -> combine, validates -> validate).
DEFAULT_RULES: tuple[tuple[str, str], ...] = (
    ("ies", "y"),
    ("sses", "ss"),
    ("ches", "ch"),
    ("shes", "sh"),
    ("xes", "x"),
    ("zes", "z"),
    ("ses", "s"),
    ("ied", "y"),
    ("ed", "e"),
    ("ing", ""),
    ("es", "e"),
    ("s", ""),
)

# Endings exempt from the bare-"s" rule.
DEFAULT_GUARD: frozenset[str] = frozenset({"ss", "us", "is"})


@dataclass(frozen=True)
class StemRuleSet:
    """Immutable stemming configuration; safe to share across threads."""

    rules: tuple[tuple[str, str], ...] = DEFAULT_RULES
    exceptions: Mapping[str, str] = field(default_factory=dict)
    guard: frozenset[str] = DEFAULT_GUARD

    def __post_init__(self):
        object.__setattr__(self, "_guard_tuple", tuple(sorted(self.guard)))


def _apply_rules(word: str, ruleset: StemRuleSet) -> str:
    guard = ruleset._guard_tuple
    for suffix, replacement in ruleset.rules:
        if not word.endswith(suffix):
            continue
        if suffix == "s" and guard and word.endswith(guard):
            continue
        candidate = word[: len(word) - len(suffix)] + replacement
        if not candidate:
            continue
        return candidate
    return word


def stem(word: str, ruleset: StemRuleSet | None = None) -> str:
    """Stem one lowercase word.

    Lookup order: length bypass, exception lexicon, then the ordered rules.
    """
    if ruleset is None:
        ruleset = default_ruleset()
    if len(word) <= SHORT_WORD_LEN:
        return word
    root = ruleset.exceptions.get(word)
    if root is not None:
        return root
    return _apply_rules(word, ruleset)


def _stem_many_py(words: list[str], ruleset: StemRuleSet) -> list[str]:
    out = []
    for word in words:
        if len(word) <= SHORT_WORD_LEN:
            out.append(word)
            continue
        root = ruleset.exceptions.get(word)
        if root is not None:
            out.append(root)
            continue
        out.append(_apply_rules(word, ruleset))
    return out


def stem_many(words: list[str], ruleset: StemRuleSet | None = None) -> list[str]:
    """Stem a token list, preserving order. Batch counterpart of stem()."""
    if ruleset is None:
        ruleset = default_ruleset()
    if speedups is not None:
        return speedups.stem_many(
            words,
            dict(ruleset.exceptions),
            ruleset.rules,
            ruleset._guard_tuple,
            SHORT_WORD_LEN,
        )
    return _stem_many_py(words, ruleset)


def load_exceptions(path) -> dict[str, str]:
    """Read a lexicon file of "word<TAB>root" lines into a dict.

    '#' starts a comment; blank lines are ignored; a duplicate word keeps
    the last entry and logs a warning.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read exception lexicon {path}: {exc}") from exc
    return _parse_exceptions(text, path)


def _parse_exceptions(text: str, label) -> dict[str, str]:
    exceptions: dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise LexiconFormatError(
                label, line_no, f"expected 'word<TAB>root', got {raw.strip()!r}"
            )
        word, root = fields[0].strip(), fields[1].strip()
        if not word or not root:
            raise LexiconFormatError(label, line_no, "empty word or root")
        if word in exceptions:
            logger.warning(
                "%s:%d: duplicate entry for %r, keeping the later one",
                label,
                line_no,
                word,
            )
        exceptions[word] = root
    return exceptions


_default: StemRuleSet | None = None


def bundled_exceptions_path():
    """Filesystem path of the exception lexicon shipped with the package."""
    return resources.files("doccloud").joinpath("data/exceptions.tsv")


def bundled_validation_words() -> list[str]:
    """The word list the idempotence property is validated against."""
    text = resources.files("doccloud").joinpath("data/validation_words.txt").read_text(
        encoding="utf-8"
    )
    words = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            words.append(line)
    return words


def default_ruleset() -> StemRuleSet:
    """The default rules plus the bundled exception lexicon (cached)."""
    global _default
    if _default is None:
        text = bundled_exceptions_path().read_text(encoding="utf-8")
        _default = StemRuleSet(
            exceptions=_parse_exceptions(text, "exceptions.tsv")
        )
    return _default

"""Documentation text to lowercase word tokens.

The pipeline is: replace every non-alphabetic character with a space,
split on whitespace, split each piece at camel-case boundaries, lowercase,
and drop tokens shorter than the requested minimum length. Tokens are plain
strings; by construction they are nonempty, lowercase and purely alphabetic.

Digits act as separators like punctuation does ("utf8x" yields "utf", "x"),
and mixed-case identifiers are split mechanically at the two boundary kinds
below even when the result looks odd ("GeTSettingS" yields ge/t/setting/s).
"""

from doccloud._accel import speedups

__all__ = ["normalize", "camel_split", "tokenize"]


def normalize(text: str) -> str:
    """Replace every non-alphabetic character with a single space.

    Alphabetic characters pass through unchanged, so the output has the
    same length as the input.
    """
    return "".join(ch if ch.isalpha() else " " for ch in text)


def _is_boundary(word: str, i: int) -> bool:
    # (a) lower followed by upper; (b) upper followed by an upper+lower pair
    prev, cur = word[i - 1], word[i]
    if prev.islower() and cur.isupper():
        return True
    return (
        prev.isupper()
        and cur.isupper()
        and i + 1 < len(word)
        and word[i + 1].islower()
    )


def camel_split(word: str) -> list[str]:
    """Split an alphabetic word at camel-case boundaries, lowercasing parts.

    Boundaries fall between a lowercase letter and a following uppercase
    letter ("skipWhitespace" -> skip, whitespace) and between an uppercase
    letter and an uppercase-then-lowercase pair ("XMLParser" -> xml, parser).
    """
    if not word:
        return []
    parts = []
    start = 0
    for i in range(1, len(word)):
        if _is_boundary(word, i):
            parts.append(word[start:i].lower())
            start = i
    parts.append(word[start:].lower())
    return parts


def _tokenize_py(text: str, min_len: int) -> list[str]:
    out = []
    for piece in normalize(text).split():
        for part in camel_split(piece):
            if len(part) >= min_len:
                out.append(part)
    return out


def tokenize(text: str, min_len: int = 1) -> list[str]:
    """Turn text into word tokens, in text order.

    `min_len` drops short tokens after camel-case splitting; it must be
    at least 1.
    """
    if min_len < 1:
        raise ValueError(f"min_len must be >= 1, got {min_len}")
    if speedups is not None:
        return speedups.tokenize(text, min_len)
    return _tokenize_py(text, min_len)

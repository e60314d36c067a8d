# cython: language_level=3
"""Compiled kernels for the corpus-scale inner loops.

These mirror the pure-Python implementations in `tokenizer` and `stemmer`
exactly; the test suite asserts identical output on randomized inputs.
Character classification and lowercasing go through CPython's Unicode
database, matching str.isalpha/str.isupper/str.islower/str.lower per
character.
"""

from cpython.unicode cimport (
    Py_UNICODE_ISALPHA,
    Py_UNICODE_ISLOWER,
    Py_UNICODE_ISUPPER,
)


def tokenize(unicode text, Py_ssize_t min_len=1):
    """One-pass normalize + whitespace split + camel split + lowercase."""
    cdef Py_ssize_t i = 0, n = len(text), start, j, k
    cdef Py_UCS4 prev, cur
    cdef bint boundary
    out = []
    while i < n:
        if not Py_UNICODE_ISALPHA(<Py_UCS4> text[i]):
            i += 1
            continue
        start = i
        i += 1
        while i < n and Py_UNICODE_ISALPHA(<Py_UCS4> text[i]):
            i += 1
        # alphabetic run is text[start:i]; split it at camel boundaries
        j = start
        for k in range(start + 1, i):
            prev = text[k - 1]
            cur = text[k]
            boundary = Py_UNICODE_ISLOWER(prev) and Py_UNICODE_ISUPPER(cur)
            if not boundary and Py_UNICODE_ISUPPER(prev) and Py_UNICODE_ISUPPER(cur):
                boundary = k + 1 < i and Py_UNICODE_ISLOWER(<Py_UCS4> text[k + 1])
            if boundary:
                part = text[j:k].lower()
                if len(part) >= min_len:
                    out.append(part)
                j = k
        part = text[j:i].lower()
        if len(part) >= min_len:
            out.append(part)
    return out


def stem_many(words, dict exceptions, tuple rules, tuple guard, Py_ssize_t bypass_len):
    """Apply the suffix-detachment ruleset to every word in a list."""
    cdef Py_ssize_t nrules = len(rules)
    cdef Py_ssize_t r
    cdef bint guarded
    out = []
    for word in words:
        if len(<unicode> word) <= bypass_len:
            out.append(word)
            continue
        root = exceptions.get(word)
        if root is not None:
            out.append(root)
            continue
        result = word
        for r in range(nrules):
            suffix = <unicode> (<tuple> rules[r])[0]
            if not (<unicode> word).endswith(suffix):
                continue
            if suffix == u"s" and guard and (<unicode> word).endswith(guard):
                continue
            replacement = <unicode> (<tuple> rules[r])[1]
            candidate = word[: len(<unicode> word) - len(suffix)] + replacement
            if not candidate:
                continue
            result = candidate
            break
        out.append(result)
    return out

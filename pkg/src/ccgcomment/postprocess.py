"""Token sequence -> final comment string."""

from __future__ import annotations

from dataclasses import dataclass


class EmptyTokens(Exception):
    pass


@dataclass(frozen=True)
class CommentText:
    text: str


def finalize(tokens) -> CommentText:
    """Join tokens into a comment: metadata stripped, first letter upper.

    A token may carry a `|tag` annotation suffix; everything from the bar
    onward is dropped.  Identifier tokens keep their spelling except in
    sentence-initial position, where the first character is uppercased
    like any other word.  No terminal punctuation is added.
    """
    words = [str(t).split("|", 1)[0] for t in tokens]
    if not words or not all(words):
        raise EmptyTokens("cannot finalize an empty token sequence")
    joined = " ".join(words)
    return CommentText(joined[0].upper() + joined[1:])

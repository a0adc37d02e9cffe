"""
Minimal s-expression reader used by the formula and proof file formats.

A node is either a Symbol (a bare word) or an SList (a parenthesized list).
Both remember the character offset where they start so that syntax errors can
point at the input.
"""

import re
from dataclasses import dataclass

from core.errors import FormulaSyntaxError

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")


@dataclass(frozen=True)
class Symbol:
    text: str
    position: int


@dataclass(frozen=True)
class SList:
    items: tuple
    position: int

    def head(self):
        """Return the leading symbol text, or None for an empty list or a list head."""
        if self.items and isinstance(self.items[0], Symbol):
            return self.items[0].text
        return None


def tokenize(text):
    """
    Split text into (kind, value, position) tokens.

    Args:
        text (str): Input text

    Returns:
        list: Tuples with kind in {"(", ")", "sym"}
    """
    tokens = []
    pos = 0
    length = len(text)
    while pos < length:
        match = _TOKEN.match(text, pos)
        if match is None:
            # Only trailing whitespace can fail to match
            if text[pos:].strip():
                raise FormulaSyntaxError("unexpected character", pos)
            break
        if match.group(1):
            tokens.append(("(", "(", match.start(1)))
        elif match.group(2):
            tokens.append((")", ")", match.start(2)))
        elif match.group(3):
            tokens.append(("sym", match.group(3), match.start(3)))
        pos = match.end()
    return tokens


def read(text):
    """
    Read exactly one s-expression from text.

    Args:
        text (str): Input text

    Returns:
        Symbol or SList: The parsed node

    Raises:
        FormulaSyntaxError: On unbalanced parentheses, empty input or trailing tokens
    """
    tokens = tokenize(text)
    if not tokens:
        raise FormulaSyntaxError("empty input", 0)
    node, index = _read_node(tokens, 0, len(text))
    if index != len(tokens):
        raise FormulaSyntaxError("unexpected trailing input", tokens[index][2])
    return node


def _read_node(tokens, index, end_position):
    kind, value, position = tokens[index]
    if kind == "sym":
        return Symbol(value, position), index + 1
    if kind == ")":
        raise FormulaSyntaxError("unexpected ')'", position)

    items = []
    index += 1
    while True:
        if index >= len(tokens):
            raise FormulaSyntaxError("missing ')'", end_position)
        if tokens[index][0] == ")":
            return SList(tuple(items), position), index + 1
        item, index = _read_node(tokens, index, end_position)
        items.append(item)

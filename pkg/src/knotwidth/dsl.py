"""The ``.kw`` text format: one event per line.

::

    # trefoil as a 4-plat
    cup 1
    cup 3
    x 2 +
    x 2 +
    x 2 +
    cap 2
    cap 1

Blank lines are ignored and ``#`` starts a comment.  Comment lines that
precede the first event are kept as document metadata.
"""

import re
from dataclasses import dataclass, field

from .errors import DslSyntaxError, ValidationError
from .model import Event, Kind, Presentation

_TOKEN = re.compile(r"\S+")
_KEYWORDS = {"cup": Kind.CUP, "cap": Kind.CAP, "x": Kind.CROSSING}


@dataclass
class DslDocument:
    events: list
    comments: list = field(default_factory=list)
    lines: list = field(default_factory=list)

    def presentation(self):
        try:
            return Presentation(tuple(self.events))
        except ValidationError as e:
            if e.index is not None and e.index < len(self.lines):
                e.line = self.lines[e.index]
                e.args = (f"line {e.line}: {e.args[0]}",)
            raise


def _int(tok, line, col):
    if not tok.isdigit() or int(tok) < 1:
        raise DslSyntaxError(line, col, "positive integer position", tok)
    return int(tok)


def parse_document(text):
    events, comments, lines = [], [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, hash_, comment = raw.partition("#")
        if hash_ and not events and not body.strip():
            comments.append(comment.strip())
        toks = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(body)]
        if not toks:
            continue
        (kw, col), rest = toks[0], toks[1:]
        if kw not in _KEYWORDS:
            raise DslSyntaxError(lineno, col, "one of 'cup', 'cap', 'x'", kw)
        kind = _KEYWORDS[kw]
        want = 2 if kind is Kind.CROSSING else 1
        if len(rest) < want:
            end = len(body.rstrip()) + 1
            raise DslSyntaxError(lineno, end, "position" if not rest else "sign '+' or '-'")
        if len(rest) > want:
            tok, c = rest[want]
            raise DslSyntaxError(lineno, c, "end of line", tok)
        pos = _int(rest[0][0], lineno, rest[0][1])
        sign = 1
        if kind is Kind.CROSSING:
            tok, c = rest[1]
            if tok not in ("+", "-"):
                raise DslSyntaxError(lineno, c, "sign '+' or '-'", tok)
            sign = 1 if tok == "+" else -1
        events.append(Event(kind, pos, sign))
        lines.append(lineno)
    return DslDocument(events, comments, lines)


def parse(text):
    """Parse and validate; errors carry line numbers."""
    return parse_document(text).presentation()


def serialize(p, comments=()):
    events = p.events if isinstance(p, Presentation) else p
    out = [f"# {c}" if c else "#" for c in comments]
    out += [str(e) for e in events]
    return "\n".join(out) + "\n"


def read(path):
    with open(path, encoding="utf-8") as f:
        return parse(f.read())


def write(path, p, comments=()):
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize(p, comments))

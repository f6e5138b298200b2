"""Reader and writer for the line-oriented ring-spec format.

::

    # comment
    ring "Z4" zn 4
    ring "P" product Z4 Z4
    ring "AN" algebra base=4 gens=x:2,y:2,z:2 rel x*x = 2; rel y*y = 2; ...

Relations of an algebra may also continue on following lines that start
with ``rel``.
"""

from __future__ import annotations

import re
import shlex
from typing import Iterable

from .ring import (
    PresentationError,
    RingPresentation,
    format_expr,
    parse_expr,
    product_presentation,
    zn_presentation,
)


class SpecSyntaxError(PresentationError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


_NAME = r'"(?P<name>[^"]+)"'
_HEAD = re.compile(r"^ring\s+" + _NAME + r"\s+(?P<kind>\w+)\s*(?P<rest>.*)$")
_REL = re.compile(r"^rel\s+(?P<a>[A-Za-z_]\w*)\s*\*\s*(?P<b>[A-Za-z_]\w*)\s*=\s*(?P<rhs>.+)$")
_GEN = re.compile(r"^(?P<sym>[A-Za-z_]\w*):(?P<ord>\d+)$")


def _parse_rels(text: str, lineno: int) -> list[tuple[str, str, tuple]]:
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        m = _REL.match(chunk)
        if not m:
            raise SpecSyntaxError(lineno, f"malformed relation {chunk!r}")
        try:
            expr = parse_expr(m.group("rhs"))
        except PresentationError as exc:
            raise SpecSyntaxError(lineno, str(exc)) from None
        out.append((m.group("a"), m.group("b"), expr))
    return out


class _Algebra:
    def __init__(self, name: str, rest: str, lineno: int):
        self.name, self.lineno = name, lineno
        m = re.match(r"^base\s*=\s*(\d+)\s+gens\s*=\s*(\S+)\s*(.*)$", rest)
        if not m:
            raise SpecSyntaxError(lineno, "algebra needs base=<m> gens=<sym>:<ord>,...")
        self.base = int(m.group(1))
        self.gens = []
        for g in m.group(2).split(","):
            gm = _GEN.match(g.strip())
            if not gm:
                raise SpecSyntaxError(lineno, f"malformed generator {g!r}")
            self.gens.append((gm.group("sym"), int(gm.group("ord"))))
        self.rels = _parse_rels(m.group(3), lineno)

    def finish(self) -> RingPresentation:
        pos = {s: k for k, (s, _) in enumerate(self.gens)}
        rels = []
        for a, b, expr in self.rels:
            if a in pos and b in pos and pos[a] > pos[b]:
                a, b = b, a
            rels.append((a, b, expr))
        rels.sort(key=lambda r: (pos.get(r[0], -1), pos.get(r[1], -1)))
        try:
            return RingPresentation(
                self.name, "algebra", modulus=self.base,
                generators=tuple(self.gens), relations=tuple(rels),
            )
        except PresentationError as exc:
            raise SpecSyntaxError(self.lineno, str(exc)) from None


def parse_spec(text: str) -> list[RingPresentation]:
    """Presentations in file order; duplicate names and forward references are errors."""
    out: list[RingPresentation] = []
    names: set[str] = set()
    pending: _Algebra | None = None

    def flush() -> None:
        nonlocal pending
        if pending is not None:
            out.append(pending.finish())
            pending = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("rel"):
            if pending is None:
                raise SpecSyntaxError(lineno, "relation outside an algebra definition")
            pending.rels.extend(_parse_rels(line, lineno))
            continue
        flush()
        m = _HEAD.match(line)
        if not m:
            raise SpecSyntaxError(lineno, f"cannot parse {line!r}")
        name, kind, rest = m.group("name"), m.group("kind"), m.group("rest").strip()
        if name in names:
            raise SpecSyntaxError(lineno, f"duplicate ring name {name!r}")
        names.add(name)
        try:
            if kind == "zn":
                if not rest.isdigit():
                    raise SpecSyntaxError(lineno, f"zn needs an integer modulus, got {rest!r}")
                out.append(zn_presentation(name, int(rest)))
            elif kind == "product":
                comps = shlex.split(rest)
                for c in comps:
                    if c not in names or c == name:
                        raise SpecSyntaxError(lineno, f"unknown component {c!r} (define it earlier in the file)")
                out.append(product_presentation(name, comps))
            elif kind == "algebra":
                pending = _Algebra(name, rest, lineno)
            else:
                raise SpecSyntaxError(lineno, f"unknown ring kind {kind!r}")
        except SpecSyntaxError:
            raise
        except PresentationError as exc:
            raise SpecSyntaxError(lineno, str(exc)) from None
    flush()
    return out


def _quote_component(name: str) -> str:
    return shlex.quote(name) if re.search(r"[\s'\"]", name) else name


def format_presentation(p: RingPresentation) -> str:
    head = f'ring "{p.name}" {p.kind}'
    if p.kind == "zn":
        return f"{head} {p.modulus}"
    if p.kind == "product":
        return head + " " + " ".join(_quote_component(c) for c in p.components)
    gens = ",".join(f"{s}:{o}" for s, o in p.generators)
    rels = "; ".join(f"rel {a}*{b} = {format_expr(e)}" for a, b, e in p.relations)
    return f"{head} base={p.modulus} gens={gens} {rels}"


def format_spec(presentations: Iterable[RingPresentation]) -> str:
    return "".join(format_presentation(p) + "\n" for p in presentations)

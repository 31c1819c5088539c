"""Trace Renderers - derivation traces as numbered text or DOT graphs."""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from itertools import count

from graphviz import Digraph

from src.domain.entities.trace import TraceEvent, TraceEventKind
from src.domain.value_objects.labelled_concept import LabelledConcept

OPEN_NOTE = "Satisfiable (no more rules are applicable)"


class TraceMode(str, Enum):
    """Trace output selectors accepted on the command line."""

    NONE = "none"
    TEXT = "text"
    DOT = "dot"


def render_trace(events: Sequence[TraceEvent], mode: TraceMode | str) -> str:
    """
    Render the events of one derivation.

    Args:
        events: Events in the order the engine emitted them
        mode: text for a numbered derivation, dot for a graph description

    Returns:
        The rendered document; empty text for an empty stream, an empty
        graph in dot mode
    """
    match TraceMode(mode):
        case TraceMode.NONE:
            return ""
        case TraceMode.TEXT:
            return TextTraceRenderer().render(events)
        case TraceMode.DOT:
            return DotTraceRenderer().render(events)
    raise ValueError(f"unknown trace mode: {mode}")


def _ancestors(branch_id: str) -> Iterator[str]:
    """The branch itself, then its parents up to the root."""
    parts = branch_id.split(".")
    for end in range(len(parts), 0, -1):
        yield ".".join(parts[:end])


# Text


@dataclass
class _Segment:
    """The part of a derivation between two branch points."""

    branch_id: str
    opened_by: TraceEvent | None = None
    events: list[TraceEvent] = field(default_factory=list)
    children: list[str] = field(default_factory=list)


class TextTraceRenderer:
    """
    Numbered derivation in the usual tableau layout.

    Each fact gets a line number and a justification naming the rule and the
    line numbers of its premises. Branches are printed depth first after the
    facts they share; each starts with a marker line naming the branching
    rule and the alternative taken.
    """

    INDENT = "    "

    def render(self, events: Sequence[TraceEvent]) -> str:
        if not events:
            return ""
        segments, roots = self._segments(events)
        self._lines: list[str] = []
        self._numbers: dict[str, dict[LabelledConcept, int]] = {}
        self._counter = count(1)
        for root in roots:
            self._visit(segments, segments[root])
        return "\n".join(self._lines) + "\n"

    @staticmethod
    def _segments(events: Sequence[TraceEvent]) -> tuple[dict[str, _Segment], list[str]]:
        segments: dict[str, _Segment] = {}
        roots: list[str] = []
        for event in events:
            segment = segments.get(event.branch_id)
            if segment is None:
                segment = _Segment(event.branch_id)
                segments[event.branch_id] = segment
                parent = event.parent_branch_id if event.is_fork else None
                if parent is not None and parent in segments:
                    segment.opened_by = event
                    segments[parent].children.append(event.branch_id)
                else:
                    roots.append(event.branch_id)
            segment.events.append(event)
        return segments, roots

    def _visit(self, segments: dict[str, _Segment], segment: _Segment) -> None:
        indent = self.INDENT * segment.branch_id.count(".")
        self._numbers.setdefault(segment.branch_id, {})
        opener = segment.opened_by
        if opener is not None and opener.rule is not None:
            label = opener.rule.branch_labels[opener.child_index]
            refs = self._refs(opener.parent_branch_id or segment.branch_id, opener.premises)
            self._lines.append(
                f"{'':6}{indent[:-2]}+ {segment.branch_id} {label} "
                f"{opener.rule.symbol} {refs}".rstrip()
            )
        for event in segment.events:
            self._event(segment.branch_id, indent, event)
        for child in segment.children:
            self._visit(segments, segments[child])

    def _event(self, branch_id: str, indent: str, event: TraceEvent) -> None:
        match event.kind:
            case TraceEventKind.GIVEN:
                for fact in event.conclusions:
                    self._fact(branch_id, indent, fact, "given")
            case TraceEventKind.RULE:
                source = event.parent_branch_id if event.is_fork else branch_id
                refs = self._refs(source or branch_id, event.premises)
                symbol = event.rule.symbol if event.rule else "?"
                for fact in event.conclusions:
                    self._fact(branch_id, indent, fact, f"{symbol} {refs}".rstrip())
            case TraceEventKind.CLASH:
                refs = self._refs(branch_id, event.premises)
                self._lines.append(f"{'':6}{indent}clash {refs}")
            case TraceEventKind.OPEN:
                self._lines.append(f"{'':6}{indent}open: {event.note or OPEN_NOTE}")
            case TraceEventKind.CUT:
                note = f": {event.note}" if event.note else ""
                self._lines.append(f"{'':6}{indent}cut{note}")

    def _fact(self, branch_id: str, indent: str, fact: LabelledConcept, why: str) -> None:
        number = next(self._counter)
        self._numbers[branch_id][fact] = number
        self._lines.append(f"{number:>4}. {indent}{fact}    [{why}]")

    def _refs(self, branch_id: str, premises: Sequence[LabelledConcept]) -> str:
        return ", ".join(self._line_of(branch_id, premise) for premise in premises)

    def _line_of(self, branch_id: str, fact: LabelledConcept) -> str:
        for ancestor in _ancestors(branch_id):
            number = self._numbers.get(ancestor, {}).get(fact)
            if number is not None:
                return str(number)
        return "?"


# DOT


class DotTraceRenderer:
    """
    Derivation as a graph description: one node per event, edges in
    derivation order within a branch, labelled edges where a branch forks.
    """

    def __init__(self, name: str = "derivation"):
        self._name = name

    def render(self, events: Sequence[TraceEvent]) -> str:
        graph = Digraph(self._name, node_attr={"shape": "box", "fontname": "monospace"})
        last: dict[str, str] = {}
        for seq, event in enumerate(events):
            node = f"e{seq}"
            graph.node(node, label=self._label(event), **self._style(event))
            if event.is_fork and event.parent_branch_id in last and event.rule is not None:
                label = event.rule.branch_labels[event.child_index]
                graph.edge(last[event.parent_branch_id], node, label=label)
            else:
                previous = next(
                    (last[ancestor] for ancestor in _ancestors(event.branch_id) if ancestor in last),
                    None,
                )
                if previous is not None:
                    graph.edge(previous, node)
            last[event.branch_id] = node
        return graph.source

    @staticmethod
    def _label(event: TraceEvent) -> str:
        match event.kind:
            case TraceEventKind.GIVEN:
                head = "given"
            case TraceEventKind.RULE:
                head = event.rule.symbol if event.rule else "rule"
            case TraceEventKind.CLASH:
                head = "clash"
            case TraceEventKind.OPEN:
                head = event.note or OPEN_NOTE
            case _:
                head = f"cut: {event.note}" if event.note else "cut"
        facts = event.premises if event.kind == TraceEventKind.CLASH else event.conclusions
        return "\\n".join([f"{event.branch_id} {head}", *(str(fact) for fact in facts)])

    @staticmethod
    def _style(event: TraceEvent) -> dict[str, str]:
        if event.kind == TraceEventKind.CLASH:
            return {"color": "red"}
        if event.kind == TraceEventKind.OPEN:
            return {"color": "darkgreen", "peripheries": "2"}
        if event.kind == TraceEventKind.CUT:
            return {"style": "dashed"}
        return {}

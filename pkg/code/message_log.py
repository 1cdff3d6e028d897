from __future__ import annotations
from typing import List, Iterable, Optional
import textwrap

INFO = 'info'
ERROR = 'error'


class Message:
    def __init__(self, text: str, severity: str = INFO):
        self.plain_text = text
        self.severity = severity
        self.count = 1

    @property
    def full_text(self) -> str:
        """ The text with a repeat count appended once the message has stacked. """
        return f"{self.plain_text} (x{self.count})" if self.count > 1 else self.plain_text


class MessageLog:
    """ A verification report: checks append messages, failures are the error entries. """
    def __init__(self, title: Optional[str] = None) -> None:
        self.title = title
        self.messages: List[Message] = []
        self.checked = 0

    def add_message(self, text: str, severity: str = INFO, *, stack: bool = True) -> None:
        """ Record one message. With `stack` an identical repeat of the last message bumps its count. """
        if stack and self.messages and text == self.messages[-1].plain_text \
                and severity == self.messages[-1].severity:
            self.messages[-1].count += 1
        else:
            self.messages.append(Message(text, severity))

    def fail(self, text: str) -> None:
        self.add_message(text, ERROR)

    def check(self, condition: bool, text: str) -> bool:
        """ Count one check and record `text` as a failure when `condition` is false. """
        self.checked += 1
        if not condition:
            self.fail(text)
        return condition

    def extend(self, other: MessageLog) -> None:
        self.checked += other.checked
        for message in other.messages:
            for _ in range(message.count):
                self.add_message(message.plain_text, message.severity)

    @property
    def failures(self) -> List[Message]:
        return [m for m in self.messages if m.severity == ERROR]

    @property
    def ok(self) -> bool:
        return not self.failures

    @staticmethod
    def wrap(text: str, width: int) -> Iterable[str]:
        for line in text.splitlines():
            yield from textwrap.wrap(line, width, subsequent_indent='    ') or ['']

    def render(self, width: int = 100) -> str:
        lines = []
        if self.title:
            lines.append(self.title)
        for message in self.messages:
            prefix = 'FAIL: ' if message.severity == ERROR else ''
            lines.extend(self.wrap(prefix + message.full_text, width))
        status = 'ok' if self.ok else f'{len(self.failures)} failing'
        lines.append(f'{self.checked} checks, {status}')
        return '\n'.join(lines)

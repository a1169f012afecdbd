from enum import Enum
from typing import Dict


class MessageLevel(Enum):
    INFO = 0
    WARNING = 1
    ERROR = 2


class Message:

    def __init__(
        self: 'Message',
        subject: str,
        level: MessageLevel,
        text: str
    ) -> None:
        self.subject = subject
        self.level = level
        self.text = text

    def __str__(self: 'Message') -> str:
        return '[{}] {}: {}'.format(self.level.name, self.subject, self.text)

    def __repr__(self: 'Message') -> str:
        return '<Message {}>'.format(self)

    def to_dict(self: 'Message') -> Dict[str, str]:
        return {
            'subject': self.subject,
            'level': self.level.name,
            'message': self.text
        }

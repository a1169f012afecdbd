from typing import Any, Dict, List


class CheckReport:
    """Outcome of one property check over a number of cases"""

    name: str
    checked: int
    failures: List[Dict[str, Any]]

    def __init__(self: 'CheckReport', name: str) -> None:
        self.name = name
        self.checked = 0
        self.failures = []

    @property
    def passed(self: 'CheckReport') -> bool:
        return not self.failures

    def record(
        self: 'CheckReport',
        ok: bool,
        **details: Any
    ) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(details)

    def fail(self: 'CheckReport', **details: Any) -> None:
        self.record(False, **details)

    def __repr__(self: 'CheckReport') -> str:
        return '<CheckReport {} {}/{} passed>'.format(
            self.name, self.checked - len(self.failures), self.checked)

    def to_dict(self: 'CheckReport') -> Dict[str, Any]:
        return {
            'name': self.name,
            'passed': self.passed,
            'checked': self.checked,
            'failures': self.failures
        }

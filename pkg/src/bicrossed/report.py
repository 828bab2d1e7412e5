"""Violation records shared by every checker."""

from dataclasses import dataclass, field


def render(x):
    """Deterministic text form of witnesses and tensor values."""
    if isinstance(x, dict):
        items = sorted(((render(k), render(v)) for k, v in x.items()))
        return "{" + ", ".join(f"{k}: {v}" for k, v in items) + "}"
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(render(y) for y in x) + ")"
    return str(x)


@dataclass
class Violation:
    identity: str
    ref: str
    witness: object
    lhs: object = None
    rhs: object = None

    def as_dict(self):
        return {
            "identity": self.identity,
            "ref": self.ref,
            "witness": render(self.witness),
            "lhs": render(self.lhs),
            "rhs": render(self.rhs),
        }


@dataclass
class Report:
    suite: str
    violations: list = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self):
        return not self.violations

    def expect(self, identity, ref, witness, lhs, rhs):
        self.checked += 1
        if lhs != rhs:
            self.violations.append(Violation(identity, ref, witness, lhs, rhs))
            return False
        return True

    def extend(self, other):
        self.violations.extend(other.violations)
        self.checked += other.checked
        return self

    def identities(self):
        return sorted({v.identity for v in self.violations})

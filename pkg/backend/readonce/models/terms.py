"""
Minterm/maxterm lists and the oracle verdict
"""
from dataclasses import dataclass
from enum import Enum


class TermKind(Enum):
    MINTERM = 'minterm'
    MAXTERM = 'maxterm'


@dataclass(frozen=True)
class TermList:
    kind: TermKind
    sets: tuple

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, varset):
        return varset in self.sets

    def supersets_of(self, varset):
        """Members that include `varset`"""
        return [s for s in self.sets if varset <= s]

    def to_dict(self, registry=None):
        return {
            'kind': self.kind.value,
            'count': len(self.sets),
            'sets': [s.names(registry) if registry else s.ids() for s in self.sets],
        }

    def __repr__(self):
        return f'<TermList {self.kind.value} x{len(self.sets)}>'


@dataclass(frozen=True)
class ReadOnceVerdict:
    read_once: bool
    witness: tuple = None  # (minterm, maxterm) when not read-once

    def __post_init__(self):
        if self.read_once == (self.witness is not None):
            raise ValueError('a negative verdict carries a witness, a positive one does not')

    def to_dict(self, registry=None):
        verdict = {
            'verdict': 'READ_ONCE' if self.read_once else 'NOT_READ_ONCE',
            'step': None,
            'minterm': None,
            'maxterm': None,
        }
        if self.witness is not None:
            minterm, maxterm = self.witness
            verdict['minterm'] = minterm.names(registry) if registry else minterm.ids()
            verdict['maxterm'] = maxterm.names(registry) if registry else maxterm.ids()
        return verdict

    def __repr__(self):
        return f'<ReadOnceVerdict read_once={self.read_once} witness={self.witness}>'

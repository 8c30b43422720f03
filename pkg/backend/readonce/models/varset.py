"""
Bitmask-backed variable sets and assignments
"""
from dataclasses import dataclass


def _ids_of(items):
    mask = 0
    for item in items:
        mask |= 1 << getattr(item, 'id', item)
    return mask


@dataclass(frozen=True)
class VarSet:
    """A set of variable ids stored as a bitmask (bit v set iff v in the set)"""
    mask: int = 0

    @classmethod
    def of(cls, items=()):
        """Build from variable ids or Variable objects"""
        return cls(_ids_of(items))

    @classmethod
    def from_names(cls, registry, names):
        return cls(_ids_of(registry.intern(name) for name in names))

    def ids(self):
        """Member ids in ascending order"""
        mask, result = self.mask, []
        while mask:
            low = mask & -mask
            result.append(low.bit_length() - 1)
            mask ^= low
        return result

    def __iter__(self):
        return iter(self.ids())

    def __len__(self):
        return self.mask.bit_count()

    def __bool__(self):
        return self.mask != 0

    def __contains__(self, item):
        return bool(self.mask >> getattr(item, 'id', item) & 1)

    def __or__(self, other):
        return VarSet(self.mask | other.mask)

    def __and__(self, other):
        return VarSet(self.mask & other.mask)

    def __sub__(self, other):
        return VarSet(self.mask & ~other.mask)

    def __le__(self, other):
        return self.mask & ~other.mask == 0

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def issubset(self, other):
        return self <= other

    def isdisjoint(self, other):
        return self.mask & other.mask == 0

    def add(self, item):
        return VarSet(self.mask | 1 << getattr(item, 'id', item))

    def discard(self, item):
        return VarSet(self.mask & ~(1 << getattr(item, 'id', item)))

    def sort_key(self):
        """Order by size, then lexicographically by ascending ids"""
        return (len(self), self.ids())

    def names(self, registry):
        """Member names sorted alphabetically"""
        return registry.names(self.ids())

    def render(self, registry):
        return '{' + ', '.join(self.names(registry)) + '}'

    def to_dict(self, registry=None):
        if registry is None:
            return {'ids': self.ids()}
        return {'ids': self.ids(), 'names': self.names(registry)}

    def __repr__(self):
        return f'VarSet({self.ids()})'


EMPTY = VarSet(0)


@dataclass(frozen=True)
class Assignment:
    """
    A total 0/1 assignment over a registry of `width` variables.

    Bit v holds the value of variable v; bits at or above `width` are zero.
    """
    mask: int
    width: int

    def __post_init__(self):
        if self.mask >> self.width:
            raise ValueError('assignment has bits outside its width')

    @classmethod
    def from_set(cls, varset, value, width):
        """The point f(S -> value): S set to `value`, everything else to 1 - value"""
        full = (1 << width) - 1
        mask = varset.mask & full
        return cls(mask if value else full & ~mask, width)

    @classmethod
    def from_values(cls, values, width):
        """Build from a mapping {variable or id: bit}; unmentioned bits are 0"""
        mask = 0
        for key, bit in values.items():
            if bit:
                mask |= 1 << getattr(key, 'id', key)
        return cls(mask, width)

    def __getitem__(self, item):
        return self.mask >> getattr(item, 'id', item) & 1

    def with_value(self, item, bit):
        index = getattr(item, 'id', item)
        mask = self.mask | 1 << index if bit else self.mask & ~(1 << index)
        return Assignment(mask, self.width)

    def ones(self):
        return VarSet(self.mask)

    def zeros(self):
        return VarSet(((1 << self.width) - 1) & ~self.mask)

    def to_dict(self, registry=None):
        if registry is None:
            return {'width': self.width, 'ones': self.ones().ids()}
        return {'width': self.width, 'ones': self.ones().names(registry)}

    def __repr__(self):
        return f'<Assignment ones={self.ones().ids()} width={self.width}>'

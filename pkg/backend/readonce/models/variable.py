"""
Variable and registry models shared by formulas, instances and witnesses
"""
import re
from dataclasses import dataclass

from ..errors import ReadOnceError

NAME_PATTERN = re.compile(r'[A-Za-z_][A-Za-z0-9_]*\Z')


@dataclass(frozen=True)
class Variable:
    id: int
    name: str

    def to_dict(self):
        """Convert variable to dictionary for reports"""
        return {'id': self.id, 'name': self.name}

    def __repr__(self):
        return f'<Variable {self.name}#{self.id}>'


class VariableRegistry:
    """
    Interns variable names to dense ids 0..n-1.

    One registry is shared per analysis session so that VarSet bitmasks built
    from C, D and the witnesses are comparable.
    """

    def __init__(self, names=()):
        self._by_name = {}
        self._by_id = []
        for name in names:
            self.intern(name)

    def intern(self, name):
        """Return the variable for `name`, creating it on first sight"""
        variable = self._by_name.get(name)
        if variable is not None:
            return variable

        if not NAME_PATTERN.match(name):
            raise ReadOnceError(f'invalid variable name: {name!r}')

        variable = Variable(len(self._by_id), name)
        self._by_name[name] = variable
        self._by_id.append(variable)
        return variable

    def get(self, name):
        """Look up an existing variable by name (None when unknown)"""
        return self._by_name.get(name)

    def __getitem__(self, key):
        if isinstance(key, int):
            return self._by_id[key]
        return self._by_name[key]

    def __contains__(self, name):
        return name in self._by_name

    def __len__(self):
        return len(self._by_id)

    def __iter__(self):
        return iter(self._by_id)

    def names(self, ids):
        """Names for an iterable of ids, sorted by name"""
        return sorted(self._by_id[i].name for i in ids)

    def to_dict(self):
        """Convert registry to dictionary for manifests"""
        return {'size': len(self), 'variables': [v.name for v in self._by_id]}

    def __repr__(self):
        return f'<VariableRegistry {len(self)} variables>'

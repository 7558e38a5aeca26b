from __future__ import annotations

from dataclasses import dataclass

from app.models.permutation import Permutation


@dataclass(frozen=True, order=True)
class CellIndex:
    """A pair v <= w indexing a cell; dim = l(w) - l(v)"""
    dim: int
    v: Permutation
    w: Permutation

    @classmethod
    def of(cls, v: Permutation, w: Permutation) -> CellIndex:
        return cls(w.length - v.length, v, w)

    def to_dict(self, top=None):
        data = {'v': str(self.v), 'w': str(self.w), 'dim': self.dim}
        if top is not None:
            data['top'] = top
        return data

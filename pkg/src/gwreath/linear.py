"""Sparse integer linear combinations over hashable basis keys.

Coefficients are plain Python ints, so arithmetic is exact at any size.
Zero coefficients are never stored; equality is term-set equality.
"""

from __future__ import annotations


class LinearCombination:
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict = {}
        if terms is not None:
            items = terms.items() if hasattr(terms, "items") else terms
            for key, coeff in items:
                if not isinstance(coeff, int):
                    raise TypeError(
                        f"coefficients must be exact integers, got {coeff!r}"
                    )
                value = data.get(key, 0) + coeff
                if value:
                    data[key] = value
                elif key in data:
                    del data[key]
        self._terms = data

    @classmethod
    def basis(cls, key) -> "LinearCombination":
        return cls({key: 1})

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key) -> int:
        return self._terms.get(key, 0)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "LinearCombination":
        if not isinstance(other, LinearCombination):
            return NotImplemented
        data = dict(self._terms)
        for key, coeff in other._terms.items():
            value = data.get(key, 0) + coeff
            if value:
                data[key] = value
            else:
                del data[key]
        result = LinearCombination()
        result._terms = data
        return result

    def __neg__(self) -> "LinearCombination":
        result = LinearCombination()
        result._terms = {key: -coeff for key, coeff in self._terms.items()}
        return result

    def __sub__(self, other) -> "LinearCombination":
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar) -> "LinearCombination":
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return LinearCombination()
        result = LinearCombination()
        result._terms = {key: scalar * coeff for key, coeff in self._terms.items()}
        return result

    __rmul__ = __mul__

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{key!r}: {coeff}" for key, coeff in sorted(self._terms.items(), key=repr)
        )
        return f"LinearCombination({{{parts}}})"

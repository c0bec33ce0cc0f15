"""Elements of an extension field as first-class values."""
from dataclasses import dataclass

from .field import FieldDesc
from .poly import GFPoly


@dataclass(frozen=True)
class ExtElement:
    """An element of F_{q^n} = F_q[x]/(m), stored as its int encoding.

    ``rep`` is the residue as a GFPoly over the base field, of degree < n.
    """

    field: FieldDesc
    value: int

    @classmethod
    def from_rep(cls, field, rep):
        if rep.field != field.base:
            raise ValueError("residue must live over the base field")
        if rep.degree >= field.degree:
            rep = rep % field.modulus
        return cls(field, field.from_digits(list(rep.coeffs) + [0] * (field.degree - len(rep.coeffs))))

    @classmethod
    def generator(cls, field):
        return cls(field, field.generator)

    @property
    def rep(self):
        return GFPoly(self.field.base, self.field.digits(self.value))

    def _coerce(self, other):
        if isinstance(other, ExtElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.value
        return self.field.reduce(other)

    def __add__(self, other):
        return ExtElement(self.field, self.field.add(self.value, self._coerce(other)))

    def __sub__(self, other):
        return ExtElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return ExtElement(self.field, self.field.mul(self.value, self._coerce(other)))

    def __truediv__(self, other):
        return ExtElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __pow__(self, e):
        return ExtElement(self.field, self.field.pow(self.value, e))

    def __neg__(self):
        return ExtElement(self.field, self.field.neg(self.value))

    __radd__ = __add__
    __rmul__ = __mul__

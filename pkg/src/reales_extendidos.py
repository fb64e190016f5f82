"""
Aritmética exacta sobre los reales extendidos.

Un RealExtendido es un racional exacto (fractions.Fraction), +∞ o -∞. La suma es parcial:
∞ + (-∞) no está permitida y se reporta con SumaIlegal en vez de producir NaN. El producto
por un escalar racional es total, con la convención 0 · (±∞) = 0.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

import mpmath

from src.utils.errores import SumaIlegal

Racional = Fraction


class Etiqueta(Enum):
    """Etiqueta del valor extendido."""
    MENOS_INFINITO = -1
    FINITO = 0
    MAS_INFINITO = 1


@total_ordering
@dataclass(frozen=True)
class RealExtendido:
    """
    Escalar en ℝ ∪ {±∞}.

    Atributos:
        etiqueta (Etiqueta): FINITO, MAS_INFINITO o MENOS_INFINITO.
        valor (Fraction): valor racional reducido; vale 0 para los infinitos.
    """

    etiqueta: Etiqueta
    valor: Fraction = Fraction(0)

    def __post_init__(self):
        if self.etiqueta is not Etiqueta.FINITO and self.valor != 0:
            object.__setattr__(self, 'valor', Fraction(0))
        elif not isinstance(self.valor, Fraction):
            object.__setattr__(self, 'valor', Fraction(self.valor))

    @classmethod
    def finito(cls, valor) -> 'RealExtendido':
        return cls(Etiqueta.FINITO, Fraction(valor))

    @property
    def es_finito(self) -> bool:
        return self.etiqueta is Etiqueta.FINITO

    @property
    def es_infinito(self) -> bool:
        return self.etiqueta is not Etiqueta.FINITO

    def _clave(self):
        return (self.etiqueta.value, self.valor)

    def __lt__(self, other):
        if not isinstance(other, RealExtendido):
            return NotImplemented
        return self._clave() < other._clave()

    def __add__(self, other):
        return sumar(self, como_real_extendido(other))

    __radd__ = __add__

    def __neg__(self):
        return escalar(Fraction(-1), self)

    def __sub__(self, other):
        return sumar(self, -como_real_extendido(other))

    def __mul__(self, alfa):
        if isinstance(alfa, RealExtendido):
            return NotImplemented
        return escalar(Fraction(alfa), self)

    __rmul__ = __mul__

    def __str__(self):
        if self.etiqueta is Etiqueta.MAS_INFINITO:
            return "inf"
        if self.etiqueta is Etiqueta.MENOS_INFINITO:
            return "-inf"
        return formatear_racional(self.valor)

    def __repr__(self):
        return f"RealExtendido({self})"


MAS_INFINITO = RealExtendido(Etiqueta.MAS_INFINITO)
MENOS_INFINITO = RealExtendido(Etiqueta.MENOS_INFINITO)
CERO = RealExtendido.finito(0)


def como_real_extendido(x: Union[RealExtendido, Fraction, int]) -> RealExtendido:
    """Convierte enteros y racionales en valores extendidos finitos."""
    if isinstance(x, RealExtendido):
        return x
    if isinstance(x, float):
        raise TypeError("Los flotantes no se aceptan: use Fraction o texto racional")
    return RealExtendido.finito(Fraction(x))


def sumar(a: RealExtendido, b: RealExtendido) -> RealExtendido:
    """
    Suma extendida. β + ∞ = ∞, β - ∞ = -∞.

    Raises:
        SumaIlegal: si {a, b} = {+∞, -∞}.
    """
    if a.es_finito and b.es_finito:
        return RealExtendido.finito(a.valor + b.valor)
    if a.es_infinito and b.es_infinito and a.etiqueta is not b.etiqueta:
        raise SumaIlegal(f"No se puede sumar {a} con {b}")
    return a if a.es_infinito else b


def es_suma_legal(a: RealExtendido, b: RealExtendido) -> bool:
    return not (a.es_infinito and b.es_infinito and a.etiqueta is not b.etiqueta)


def sumar_todos(valores: Iterable[RealExtendido]) -> RealExtendido:
    """Suma una colección; la suma es legal si no contiene a la vez +∞ y -∞."""
    total = CERO
    for valor in valores:
        total = sumar(total, valor)
    return total


def escalar(alfa: Fraction, a: RealExtendido) -> RealExtendido:
    """
    Producto α · a. Total: 0 · (±∞) = 0 y un α negativo invierte los infinitos.
    """
    alfa = Fraction(alfa)
    if a.es_finito:
        return RealExtendido.finito(alfa * a.valor)
    if alfa == 0:
        return CERO
    if alfa > 0:
        return a
    return MENOS_INFINITO if a.etiqueta is Etiqueta.MAS_INFINITO else MAS_INFINITO


def signo(a: Union[RealExtendido, Fraction, int]) -> int:
    """Signo en {-1, 0, 1}; -∞ da -1 y +∞ da 1."""
    a = como_real_extendido(a)
    if a.es_infinito:
        return a.etiqueta.value
    return (a.valor > 0) - (a.valor < 0)


def supremo(valores: Iterable[RealExtendido]) -> RealExtendido:
    """Supremo de una lista finita; sup ∅ = -∞."""
    return max(valores, default=MENOS_INFINITO)


def infimo(valores: Iterable[RealExtendido]) -> RealExtendido:
    """Ínfimo de una lista finita; inf ∅ = +∞."""
    return min(valores, default=MAS_INFINITO)


def formatear_racional(valor: Fraction) -> str:
    """Forma textual "a/b" o "a"."""
    if valor.denominator == 1:
        return str(valor.numerator)
    return f"{valor.numerator}/{valor.denominator}"


def parsear_racional(texto) -> Fraction:
    """
    Interpreta "a/b", "a" o un decimal como racional exacto.

    Raises:
        ValueError: si el texto no es un racional.
    """
    if isinstance(texto, bool) or isinstance(texto, float):
        raise ValueError(f"Valor racional inválido: {texto!r}")
    if isinstance(texto, int):
        return Fraction(texto)
    try:
        return Fraction(str(texto).strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Valor racional inválido: {texto!r}")


def parsear_real_extendido(texto) -> RealExtendido:
    """Interpreta "inf", "-inf" o un racional."""
    limpio = str(texto).strip().lower()
    if limpio in ('inf', '+inf'):
        return MAS_INFINITO
    if limpio == '-inf':
        return MENOS_INFINITO
    return RealExtendido.finito(parsear_racional(texto))


def formatear_decimal(a: RealExtendido, digitos: int) -> str:
    """Representación decimal con `digitos` cifras significativas; los infinitos como "inf"/"-inf"."""
    if a.es_infinito:
        return str(a)
    if a.valor == 0:
        return "0"
    with mpmath.workdps(digitos + 10):
        decimal = mpmath.mpf(a.valor.numerator) / a.valor.denominator
        return mpmath.nstr(decimal, digitos)

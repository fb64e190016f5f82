"""
Módulo de equivalencia de funciones lineales extendidas.

Dos parametrizaciones canónicas distintas definen funciones distintas. Este módulo construye
explícitamente un punto donde las evaluaciones difieren y ofrece la comparación por muestras.
"""

from fractions import Fraction
from typing import Iterable, Optional

from src.geometria import (
    VectorRacional,
    escalar_vector,
    producto_punto,
    restar_vectores,
)
from src.utils.errores import DimensionesIncompatibles


def _componente_ortogonal(u: VectorRacional, v: VectorRacional) -> VectorRacional:
    """Componente de u ortogonal a v."""
    return restar_vectores(u, escalar_vector(producto_punto(u, v) / producto_punto(v, v), v))


def punto_distintivo(f1, f2) -> Optional[VectorRacional]:
    """
    Punto x con f1(x) ≠ f2(x), o None si los parámetros canónicos coinciden.

    Recorre las direcciones mientras coinciden. Ante el primer par distinto (v¹, v²) devuelve
    u¹ - u², donde uⁱ es la componente de vⁱ ortogonal a la otra dirección: v¹ · x > 0 y
    v² · x < 0. Si una lista es prefijo de la otra usa la dirección sobrante; si sólo difieren
    las colas devuelve w¹ - w².
    Args:
        f1, f2: funciones lineales extendidas de la misma dimensión.
    Returns:
        VectorRacional o None.
    """
    if f1.dim != f2.dim:
        raise DimensionesIncompatibles(f"Dimensiones distintas: {f1.dim} y {f2.dim}")

    comunes = min(f1.profundidad, f2.profundidad)
    for v1, v2 in zip(f1.direcciones[:comunes], f2.direcciones[:comunes]):
        if v1 == v2:
            continue
        u1 = _componente_ortogonal(v1, v2)
        if all(c == 0 for c in u1):
            # v² = -v¹
            return v1
        u2 = _componente_ortogonal(v2, v1)
        return restar_vectores(u1, u2)

    if f1.profundidad > comunes:
        return f1.direcciones[comunes]
    if f2.profundidad > comunes:
        return f2.direcciones[comunes]
    if f1.cola != f2.cola:
        return restar_vectores(f1.cola, f2.cola)
    return None


def equivalencia_lineal_extendida(f1, f2) -> bool:
    """
    Verifica si dos funciones lineales extendidas son iguales punto a punto.
    Retorna False si existe un punto que las distingue.
    """
    return punto_distintivo(f1, f2) is None


def primera_diferencia(evaluador1, evaluador2, puntos: Iterable) -> Optional[VectorRacional]:
    """
    Compara dos evaluadores sobre una lista de puntos y retorna el primero donde difieren.
    """
    for x in puntos:
        x = tuple(Fraction(c) for c in x)
        if evaluador1(x) != evaluador2(x):
            return x
    return None

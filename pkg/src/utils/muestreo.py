"""
Muestreo reproducible de racionales, vectores y grillas del símplex.

Todo el azar pasa por numpy.random.default_rng(semilla): la misma semilla produce la misma
secuencia de muestras exactas en cualquier plataforma.
"""

from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

import numpy as np

DENOMINADOR_MAXIMO = 64
ALFAS_ESTRUCTURADOS = (Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(0), Fraction(3), Fraction(-1, 3))


def generador(semilla: int) -> np.random.Generator:
    """Generador de numpy inicializado con la semilla dada."""
    return np.random.default_rng(semilla)


def racional_aleatorio(rng: np.random.Generator, denominador_maximo: int = DENOMINADOR_MAXIMO,
                       magnitud: int = 4) -> Fraction:
    """Racional a/b con 1 ≤ b ≤ denominador_maximo y |a/b| ≤ magnitud."""
    denominador = int(rng.integers(1, denominador_maximo + 1))
    numerador = int(rng.integers(-magnitud * denominador, magnitud * denominador + 1))
    return Fraction(numerador, denominador)


def racional_positivo(rng: np.random.Generator, denominador_maximo: int = DENOMINADOR_MAXIMO) -> Fraction:
    """Racional estrictamente positivo con denominador acotado."""
    denominador = int(rng.integers(1, denominador_maximo + 1))
    numerador = int(rng.integers(1, 4 * denominador + 1))
    return Fraction(numerador, denominador)


def vector_aleatorio(rng: np.random.Generator, dim: int,
                     denominador_maximo: int = DENOMINADOR_MAXIMO) -> Tuple[Fraction, ...]:
    return tuple(racional_aleatorio(rng, denominador_maximo) for _ in range(dim))


def vector_entero_aleatorio(rng: np.random.Generator, dim: int, cota: int = 3) -> Tuple[Fraction, ...]:
    """Vector con coordenadas enteras en [-cota, cota]; produce muchos ceros y empates de signo."""
    return tuple(Fraction(int(rng.integers(-cota, cota + 1))) for _ in range(dim))


def _composiciones(total: int, partes: int) -> Iterator[Tuple[int, ...]]:
    if partes == 1:
        yield (total,)
        return
    for primero in range(total + 1):
        for resto in _composiciones(total - primero, partes - 1):
            yield (primero,) + resto


def grilla_farey(n: int, denominador: int) -> List[Tuple[Fraction, ...]]:
    """
    Todas las distribuciones sobre n resultados cuyas coordenadas tienen denominador ≤ `denominador`
    (con denominador común m ≤ denominador).

    El orden es lexicográfico sobre la tupla invertida: para n = 2 equivale a p(1) ascendente.
    Incluye siempre los vértices del símplex.
    """
    if n < 1:
        raise ValueError("❌ La grilla necesita al menos un resultado")
    if denominador < 1:
        raise ValueError("❌ El denominador de la grilla debe ser ≥ 1")
    puntos = set()
    for m in range(1, denominador + 1):
        for composicion in _composiciones(m, n):
            puntos.add(tuple(Fraction(k, m) for k in composicion))
    return sorted(puntos, key=lambda p: tuple(reversed(p)))


def grilla_interior(n: int, denominador: int) -> List[Tuple[Fraction, ...]]:
    """Puntos de la grilla de Farey con soporte completo."""
    return [p for p in grilla_farey(n, denominador) if all(x > 0 for x in p)]


def distribucion_aleatoria(rng: np.random.Generator, n: int, denominador: int = 12,
                           prob_cero: float = 0.3) -> Tuple[Fraction, ...]:
    """
    Distribución racional sobre n resultados. Cada coordenada se anula con probabilidad `prob_cero`
    para cubrir soportes parciales y vértices.
    """
    pesos = [0 if rng.random() < prob_cero else int(rng.integers(1, denominador + 1)) for _ in range(n)]
    if sum(pesos) == 0:
        pesos[int(rng.integers(0, n))] = 1
    total = sum(pesos)
    return tuple(Fraction(w, total) for w in pesos)


def combinacion_convexa_aleatoria(rng: np.random.Generator,
                                  vertices: Sequence[Tuple[Fraction, ...]]) -> Tuple[Fraction, ...]:
    """Combinación convexa racional de los vértices con pesos aleatorios."""
    pesos = [int(rng.integers(0, 17)) for _ in vertices]
    if sum(pesos) == 0:
        pesos[int(rng.integers(0, len(vertices)))] = 1
    total = sum(pesos)
    dim = len(vertices[0])
    return tuple(sum((Fraction(w, total) * z[k] for w, z in zip(pesos, vertices)), Fraction(0))
                 for k in range(dim))


def muestras_axiomas(rng: np.random.Generator, dim: int, direcciones: Sequence[Tuple[Fraction, ...]] = (),
                     cantidad: int = 1000) -> List[Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...], Fraction]]:
    """
    Ternas (x, x', α) para probar homogeneidad y aditividad.

    Primero van las muestras estructuradas (vectores canónicos con los escalares de
    ALFAS_ESTRUCTURADOS, las direcciones y sus opuestos), luego vectores enteros pequeños y por
    último racionales con denominador ≤ 64.
    """
    estructurados = []
    canonicos = [tuple(Fraction(1 if i == k else 0) for i in range(dim)) for k in range(dim)]
    for x in canonicos:
        for alfa in ALFAS_ESTRUCTURADOS:
            estructurados.append((x, tuple(-c for c in x), alfa))
    for v in direcciones:
        opuesto = tuple(-c for c in v)
        estructurados.append((v, opuesto, Fraction(2)))
        estructurados.append((v, v, Fraction(-1)))
        for x in canonicos:
            estructurados.append((v, x, Fraction(1, 2)))

    muestras = estructurados[:cantidad]
    while len(muestras) < cantidad:
        if len(muestras) % 2 == 0:
            x = vector_entero_aleatorio(rng, dim)
            x_prima = vector_entero_aleatorio(rng, dim)
        else:
            x = vector_aleatorio(rng, dim)
            x_prima = vector_aleatorio(rng, dim)
        muestras.append((x, x_prima, racional_aleatorio(rng)))
    return muestras

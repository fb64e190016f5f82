"""
Álgebra lineal racional exacta y búsqueda de hiperplanos de soporte para politopos.

Los vectores son tuplas de fractions.Fraction. Las operaciones de rango, ortogonalización,
núcleo y programación lineal se delegan en sympy, que trabaja con racionales exactos; los
resultados se devuelven siempre como Fraction.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

import sympy
from sympy.solvers.simplex import linprog

from src.utils.errores import (
    DimensionesIncompatibles,
    EntradaDependiente,
    PrecondicionViolada,
    SinSoporte,
    VectorNulo,
)

VectorRacional = Tuple[Fraction, ...]


def como_vector(coordenadas: Iterable) -> VectorRacional:
    """Convierte cualquier iterable de enteros/racionales en un VectorRacional."""
    return tuple(Fraction(c) for c in coordenadas)


def vector_cero(dim: int) -> VectorRacional:
    return (Fraction(0),) * dim


def vector_canonico(dim: int, indice: int, valor=1) -> VectorRacional:
    """Vector con `valor` en la coordenada `indice` y ceros en el resto."""
    return tuple(Fraction(valor) if i == indice else Fraction(0) for i in range(dim))


def _verificar_dimensiones(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise DimensionesIncompatibles(f"Dimensiones distintas: {len(a)} y {len(b)}")


def producto_punto(a: VectorRacional, b: VectorRacional) -> Fraction:
    """Producto interno exacto."""
    _verificar_dimensiones(a, b)
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def sumar_vectores(a: VectorRacional, b: VectorRacional) -> VectorRacional:
    _verificar_dimensiones(a, b)
    return tuple(x + y for x, y in zip(a, b))


def restar_vectores(a: VectorRacional, b: VectorRacional) -> VectorRacional:
    _verificar_dimensiones(a, b)
    return tuple(x - y for x, y in zip(a, b))


def escalar_vector(alfa, a: VectorRacional) -> VectorRacional:
    alfa = Fraction(alfa)
    return tuple(alfa * x for x in a)


def combinacion_lineal(coeficientes: Sequence, vectores: Sequence[VectorRacional], dim: int) -> VectorRacional:
    """Σ cᵢ · vᵢ en dimensión `dim`."""
    resultado = vector_cero(dim)
    for c, v in zip(coeficientes, vectores):
        resultado = sumar_vectores(resultado, escalar_vector(c, v))
    return resultado


def es_nulo(v: VectorRacional) -> bool:
    return all(x == 0 for x in v)


def canonicalizar_direccion(v: VectorRacional) -> VectorRacional:
    """
    Devuelve (1/‖v‖∞) · v: el único múltiplo positivo de v cuya coordenada de mayor valor
    absoluto vale ±1. Preserva el signo de v · x para todo x.

    Raises:
        VectorNulo: si v = 0.
    """
    v = como_vector(v)
    norma = max((abs(x) for x in v), default=Fraction(0))
    if norma == 0:
        raise VectorNulo("No se puede canonicalizar el vector nulo")
    return tuple(x / norma for x in v)


def _a_sympy(v: VectorRacional) -> sympy.Matrix:
    return sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in v])


def _desde_sympy(columna) -> VectorRacional:
    valores = []
    for x in columna:
        r = sympy.Rational(x)
        valores.append(Fraction(int(r.p), int(r.q)))
    return tuple(valores)


def ortogonalizar(vectores: Sequence[VectorRacional]) -> list:
    """
    Gram-Schmidt exacto sin normalizar: vectores ortogonales dos a dos que generan la misma
    bandera de subespacios, cada uno canonicalizado.

    Raises:
        EntradaDependiente: si los vectores son linealmente dependientes.
    """
    vectores = [como_vector(v) for v in vectores]
    if not vectores:
        return []
    dim = len(vectores[0])
    for v in vectores:
        _verificar_dimensiones(vectores[0], v)
        if es_nulo(v):
            raise EntradaDependiente("La lista contiene el vector nulo")
    if len(vectores) > dim:
        raise EntradaDependiente(f"{len(vectores)} vectores en dimensión {dim} son dependientes")
    try:
        ortogonales = sympy.GramSchmidt([_a_sympy(v) for v in vectores], orthonormal=False)
    except ValueError:
        raise EntradaDependiente("Los vectores son linealmente dependientes")
    if len(ortogonales) != len(vectores):
        raise EntradaDependiente("Los vectores son linealmente dependientes")
    return [canonicalizar_direccion(_desde_sympy(columna)) for columna in ortogonales]


def proyectar_en_complemento(w: VectorRacional, direcciones: Sequence[VectorRacional]) -> VectorRacional:
    """
    Proyecta w sobre el complemento ortogonal de `direcciones`, que deben ser ortogonales dos a dos.
    """
    resultado = como_vector(w)
    for v in direcciones:
        coeficiente = producto_punto(resultado, v) / producto_punto(v, v)
        resultado = restar_vectores(resultado, escalar_vector(coeficiente, v))
    return resultado


def nucleo(filas: Sequence[VectorRacional], dim: int) -> list:
    """Base racional de {v : fila · v = 0 para toda fila}."""
    if not filas:
        return [vector_canonico(dim, i) for i in range(dim)]
    matriz = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in fila] for fila in filas])
    return [_desde_sympy(columna) for columna in matriz.nullspace()]


@dataclass(frozen=True)
class Politopo:
    """
    Politopo en representación V: envolvente convexa de una lista finita de vértices.

    Atributos:
        vertices (tuple): vértices como VectorRacional, todos de la misma dimensión.
    """

    vertices: Tuple[VectorRacional, ...]

    def __post_init__(self):
        vertices = tuple(como_vector(v) for v in self.vertices)
        if not vertices:
            raise ValueError("❌ Un politopo necesita al menos un vértice")
        for v in vertices:
            _verificar_dimensiones(vertices[0], v)
        object.__setattr__(self, 'vertices', vertices)

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def trasladar(self, desplazamiento: VectorRacional) -> 'Politopo':
        """Politopo {z - desplazamiento : z ∈ P}."""
        return Politopo(tuple(restar_vectores(v, desplazamiento) for v in self.vertices))

    def __str__(self):
        return f"Politopo({len(self.vertices)} vértices en dimensión {self.dim})"


def direccion_soporte(politopo: Politopo, dentro_de: Sequence[VectorRacional] = ()) -> VectorRacional:
    """
    Busca una dirección canónica v ≠ 0 con v · z ≤ 0 para todo vértice z, ortogonal a las
    direcciones de `dentro_de`.

    Resuelve exactamente min Σᵢ v · zᵢ sujeto a v · zᵢ ≤ 0, v ⟂ dentro_de y -1 ≤ v_k ≤ 1,
    escrito en la variable u = v + 1 (0 ≤ u_k ≤ 2) para que el programa use las cotas
    no negativas por defecto de linprog. Si el óptimo es 0 toma un vector del núcleo
    {v : v · zᵢ = 0, v ⟂ dentro_de}.

    Raises:
        SinSoporte: si no existe tal dirección (el origen está en el interior relativo).
    """
    dim = politopo.dim
    if dim == 0:
        raise SinSoporte("En dimensión 0 no hay direcciones")
    vertices = politopo.vertices
    dentro_de = [como_vector(w) for w in dentro_de]
    objetivo = [sum((z[k] for z in vertices), Fraction(0)) for k in range(dim)]

    def racional(x):
        return sympy.Rational(x.numerator, x.denominator)

    # z · v ≤ 0  ⟺  z · u ≤ Σ z_k ;  v_k ≤ 1  ⟺  u_k ≤ 2
    matriz_a = [[racional(x) for x in z] for z in vertices]
    vector_b = [racional(sum(z, Fraction(0))) for z in vertices]
    for k in range(dim):
        matriz_a.append([sympy.Integer(1 if j == k else 0) for j in range(dim)])
        vector_b.append(sympy.Integer(2))
    matriz_eq = [[racional(x) for x in w] for w in dentro_de] or None
    vector_eq = [racional(sum(w, Fraction(0))) for w in dentro_de] or None

    optimo, solucion = linprog([racional(x) for x in objetivo], matriz_a, vector_b, matriz_eq, vector_eq)
    if sympy.Rational(optimo) - racional(sum(objetivo, Fraction(0))) < 0:
        v = tuple(x - 1 for x in _desde_sympy(solucion))
        return canonicalizar_direccion(v)

    base = nucleo(list(vertices) + dentro_de, dim)
    if not base:
        raise SinSoporte("Ningún hiperplano por el origen deja a todos los vértices de un lado")
    return canonicalizar_direccion(base[0])


def cara_en_hiperplano(politopo: Politopo, v: VectorRacional) -> Optional[Politopo]:
    """
    Vértices sobre el hiperplano v · z = 0, o None si no hay ninguno.

    Raises:
        PrecondicionViolada: si algún vértice cumple v · z > 0.
    """
    cara = []
    for z in politopo.vertices:
        producto = producto_punto(v, z)
        if producto > 0:
            raise PrecondicionViolada(f"El vértice {tuple(map(str, z))} queda del lado positivo")
        if producto == 0:
            cara.append(z)
    return Politopo(tuple(cara)) if cara else None

"""
Funciones lineales extendidas f: ℝ^d → ℝ ∪ {±∞}.

Una función lineal extendida se guarda en su parametrización canónica: una lista ordenada de
direcciones v₁, …, v_t ortogonales dos a dos (cada una con ‖v‖∞ = 1) y una cola finita w
ortogonal a todas ellas. Evaluar en x recorre las direcciones: el primer signo no nulo de vⱼ · x
decide ±∞; si todos son nulos el valor es w · x.

Todas las direcciones viven en el espacio ambiente ℝ^d. Como cada vⱼ es ortogonal a las
anteriores, probar vⱼ · x sobre un x que ya anuló a v₁, …, vⱼ₋₁ equivale a reparametrizar x en el
subespacio correspondiente.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.geometria import (
    Politopo,
    VectorRacional,
    canonicalizar_direccion,
    cara_en_hiperplano,
    como_vector,
    direccion_soporte,
    es_nulo,
    ortogonalizar,
    producto_punto,
    proyectar_en_complemento,
    sumar_vectores,
    escalar_vector,
    vector_cero,
)
from src.reales_extendidos import (
    MAS_INFINITO,
    MENOS_INFINITO,
    RealExtendido,
    es_suma_legal,
    escalar,
    sumar,
)
from src.utils.errores import (
    ColaNoOrtogonal,
    ContieneOrigen,
    DemasiadoProfunda,
    DimensionesIncompatibles,
    DireccionNula,
    EntradaDependiente,
    NoOrtogonales,
    SinSoporte,
)
from src.utils.muestreo import generador, muestras_axiomas, vector_aleatorio

MEDIO = Fraction(1, 2)


class Clase(Enum):
    """Parte de la descomposición S⁺ / S⁻ / F a la que pertenece un punto."""
    MAS = "Plus"
    MENOS = "Minus"
    FINITO = "Finite"


@dataclass(frozen=True)
class LinealExtendida:
    """
    Parametrización canónica de una función lineal extendida.

    Atributos:
        dim (int): dimensión ambiente d.
        direcciones (tuple): v₁, …, v_t canónicas y ortogonales dos a dos (t ≤ d).
        cola (tuple): parte lineal finita w, ortogonal a todas las direcciones.

    Raises:
        DimensionesIncompatibles, DireccionNula, DemasiadoProfunda, NoOrtogonales, ColaNoOrtogonal
    """

    dim: int
    direcciones: Tuple[VectorRacional, ...] = ()
    cola: Optional[VectorRacional] = None

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionesIncompatibles(f"Dimensión inválida: {self.dim}")
        cola = vector_cero(self.dim) if self.cola is None else como_vector(self.cola)
        if len(cola) != self.dim:
            raise DimensionesIncompatibles(f"La cola tiene dimensión {len(cola)}, se esperaba {self.dim}")

        direcciones = []
        for j, v in enumerate(self.direcciones):
            v = como_vector(v)
            if len(v) != self.dim:
                raise DimensionesIncompatibles(
                    f"La dirección {j} tiene dimensión {len(v)}, se esperaba {self.dim}")
            if es_nulo(v):
                raise DireccionNula(f"La dirección {j} es el vector nulo")
            direcciones.append(canonicalizar_direccion(v))

        if len(direcciones) > self.dim:
            raise DemasiadoProfunda(f"Profundidad {len(direcciones)} mayor que la dimensión {self.dim}")

        for i in range(len(direcciones)):
            for j in range(i + 1, len(direcciones)):
                if producto_punto(direcciones[i], direcciones[j]) != 0:
                    raise NoOrtogonales(f"Las direcciones {i} y {j} no son ortogonales")
            if producto_punto(cola, direcciones[i]) != 0:
                raise ColaNoOrtogonal(f"La cola no es ortogonal a la dirección {i}")

        object.__setattr__(self, 'direcciones', tuple(direcciones))
        object.__setattr__(self, 'cola', cola)

    @property
    def profundidad(self) -> int:
        return len(self.direcciones)

    def evaluar(self, x: Iterable) -> RealExtendido:
        """Recorre las pruebas de signo en orden y termina en la parte lineal finita."""
        x = como_vector(x)
        if len(x) != self.dim:
            raise DimensionesIncompatibles(f"El punto tiene dimensión {len(x)}, se esperaba {self.dim}")
        for v in self.direcciones:
            producto = producto_punto(v, x)
            if producto > 0:
                return MAS_INFINITO
            if producto < 0:
                return MENOS_INFINITO
        return RealExtendido.finito(producto_punto(self.cola, x))

    def clasificar(self, x: Iterable) -> Clase:
        valor = self.evaluar(x)
        if valor == MAS_INFINITO:
            return Clase.MAS
        if valor == MENOS_INFINITO:
            return Clase.MENOS
        return Clase.FINITO

    def __call__(self, x: Iterable) -> RealExtendido:
        return self.evaluar(x)

    def __str__(self):
        direcciones = ", ".join("(" + ",".join(map(str, v)) + ")" for v in self.direcciones)
        cola = ",".join(map(str, self.cola))
        return f"LinExt(d={self.dim}, t={self.profundidad}, dirs=[{direcciones}], cola=({cola}))"


def cero(dim: int) -> LinealExtendida:
    """La función idénticamente nula en ℝ^dim."""
    return LinealExtendida(dim)


def lineal(cola: Iterable) -> LinealExtendida:
    """Función lineal finita x ↦ w · x (profundidad 0)."""
    cola = como_vector(cola)
    return LinealExtendida(len(cola), (), cola)


def evaluar(f: LinealExtendida, x: Iterable) -> RealExtendido:
    return f.evaluar(x)


def profundidad(f: LinealExtendida) -> int:
    return f.profundidad


def clasificar(f: LinealExtendida, x: Iterable) -> Clase:
    return f.clasificar(x)


def iguales(f: LinealExtendida, g: LinealExtendida) -> bool:
    """
    Compara parámetros canónicos. Por unicidad de la parametrización coincide con la igualdad
    punto a punto.
    """
    if f.dim != g.dim:
        raise DimensionesIncompatibles(f"Dimensiones distintas: {f.dim} y {g.dim}")
    return f.direcciones == g.direcciones and f.cola == g.cola


def agregar_al_frente(v: Iterable, f2: LinealExtendida) -> LinealExtendida:
    """
    Construye f con f(x) = ∞ · signo(v · x) fuera del hiperplano v · x = 0 y f = f2 sobre él.

    Raises:
        DireccionNula: si v = 0.
        NoOrtogonales: si alguna dirección o la cola de f2 no es ortogonal a v.
    """
    v = como_vector(v)
    if len(v) != f2.dim:
        raise DimensionesIncompatibles(f"La dirección tiene dimensión {len(v)}, se esperaba {f2.dim}")
    if es_nulo(v):
        raise DireccionNula("La nueva dirección es el vector nulo")
    for j, u in enumerate(f2.direcciones):
        if producto_punto(u, v) != 0:
            raise NoOrtogonales(f"La dirección {j} de f2 no es ortogonal a la nueva dirección")
    if producto_punto(f2.cola, v) != 0:
        raise NoOrtogonales("La cola de f2 no es ortogonal a la nueva dirección")
    return LinealExtendida(f2.dim, (canonicalizar_direccion(v),) + f2.direcciones, f2.cola)


def indicadora_negativa(politopo: Politopo) -> LinealExtendida:
    """
    Función lineal extendida que vale -∞ en todo el politopo (que no debe contener al origen).

    Elige una dirección de soporte v₁, se queda con la cara donde v₁ · z = 0 y repite dentro del
    hiperplano hasta que la cara queda vacía. La cola es nula.

    Raises:
        ContieneOrigen: si el origen está en la envolvente convexa.
    """
    direcciones: List[VectorRacional] = []
    actual: Optional[Politopo] = politopo
    while actual is not None:
        try:
            v = direccion_soporte(actual, direcciones)
        except SinSoporte:
            raise ContieneOrigen("El origen pertenece a la envolvente convexa de los vértices")
        direcciones.append(v)
        actual = cara_en_hiperplano(actual, v)
    return LinealExtendida(politopo.dim, tuple(direcciones))


def aleatoria(rng: np.random.Generator, dim: int, profundidad_deseada: Optional[int] = None,
              denominador_maximo: int = 64) -> LinealExtendida:
    """
    Función lineal extendida aleatoria: direcciones ortogonalizadas a partir de vectores racionales
    y una cola proyectada sobre su complemento ortogonal.
    """
    t = int(rng.integers(0, dim + 1)) if profundidad_deseada is None else profundidad_deseada
    while True:
        crudas = [vector_aleatorio(rng, dim, denominador_maximo) for _ in range(t)]
        try:
            direcciones = ortogonalizar(crudas)
            break
        except EntradaDependiente:
            continue
    cola = proyectar_en_complemento(vector_aleatorio(rng, dim, denominador_maximo), direcciones)
    return LinealExtendida(dim, tuple(direcciones), cola)


@dataclass(frozen=True)
class ContraejemploAxioma:
    """Primera terna que viola un axioma."""
    axioma: str
    x: VectorRacional
    x_prima: VectorRacional
    alfa: Fraction
    esperado: RealExtendido
    obtenido: RealExtendido

    def a_diccionario(self) -> dict:
        return {
            'axioma': self.axioma,
            'x': [str(c) for c in self.x],
            'x_prima': [str(c) for c in self.x_prima],
            'alfa': str(self.alfa),
            'esperado': str(self.esperado),
            'obtenido': str(self.obtenido),
        }


@dataclass(frozen=True)
class ReporteAxiomas:
    """Resultado de verificar_axiomas."""
    aprobado: bool
    muestras_verificadas: int
    sumas_ilegales_omitidas: int = 0
    contraejemplo: Optional[ContraejemploAxioma] = None


def verificar_axiomas(funcion: Union[LinealExtendida, Callable[[VectorRacional], RealExtendido]],
                      muestras: Optional[Sequence[Tuple[Iterable, Iterable, Fraction]]] = None,
                      dim: Optional[int] = None, semilla: int = 0, cantidad: int = 1000) -> ReporteAxiomas:
    """
    Prueba homogeneidad f(αx) = α · f(x), aditividad f(x + x') = f(x) + f(x') y convexidad en el
    punto medio f((x + x')/2) ≤ (f(x) + f(x'))/2, estas dos últimas cuando la suma es legal.

    Args:
        funcion: una LinealExtendida o cualquier evaluador de vectores racionales.
        muestras: ternas (x, x', α). Si se omiten se generan con la semilla dada.
        dim: dimensión, obligatoria si `funcion` no es LinealExtendida.
    Returns:
        ReporteAxiomas con el primer contraejemplo, si lo hay.
    """
    direcciones = ()
    if isinstance(funcion, LinealExtendida):
        dim = funcion.dim
        direcciones = funcion.direcciones
        evaluador = funcion.evaluar
    else:
        if dim is None:
            raise ValueError("❌ Se necesita la dimensión para verificar un evaluador arbitrario")
        evaluador = funcion

    if muestras is None:
        muestras = muestras_axiomas(generador(semilla), dim, direcciones, cantidad)

    omitidas = 0
    for verificadas, (x, x_prima, alfa) in enumerate(muestras):
        x, x_prima, alfa = como_vector(x), como_vector(x_prima), Fraction(alfa)
        valor_x = evaluador(x)

        esperado = escalar(alfa, valor_x)
        obtenido = evaluador(escalar_vector(alfa, x))
        if obtenido != esperado:
            return ReporteAxiomas(False, verificadas, omitidas,
                                  ContraejemploAxioma('escalado', x, x_prima, alfa, esperado, obtenido))

        valor_x_prima = evaluador(x_prima)
        if not es_suma_legal(valor_x, valor_x_prima):
            omitidas += 1
            continue
        esperado = sumar(valor_x, valor_x_prima)
        obtenido = evaluador(sumar_vectores(x, x_prima))
        if obtenido != esperado:
            return ReporteAxiomas(False, verificadas, omitidas,
                                  ContraejemploAxioma('aditividad', x, x_prima, alfa, esperado, obtenido))

        # convexidad en el punto medio: f((x + x')/2) ≤ (f(x) + f(x'))/2
        esperado = escalar(MEDIO, esperado)
        obtenido = evaluador(escalar_vector(MEDIO, sumar_vectores(x, x_prima)))
        if esperado < obtenido:
            return ReporteAxiomas(False, verificadas, omitidas,
                                  ContraejemploAxioma('convexidad', x, x_prima, alfa, esperado, obtenido))

    return ReporteAxiomas(True, len(muestras), omitidas)

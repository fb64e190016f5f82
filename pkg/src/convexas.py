"""
Funciones afines extendidas, subgradientes extendidos y relaciones de soporte.

Una función convexa se describe con un evaluador (que nunca devuelve -∞) y un selector que, en
cada punto de su dominio efectivo, entrega un subgradiente extendido como LinealExtendida. Las
verificaciones trabajan sobre grillas finitas de puntos de prueba y reportan el primer
contraejemplo.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from src.geometria import Politopo, VectorRacional, como_vector, restar_vectores
from src.lineal_extendida import LinealExtendida, indicadora_negativa
from src.reales_extendidos import (
    MAS_INFINITO,
    MENOS_INFINITO,
    RealExtendido,
    sumar,
    supremo,
)
from src.utils.errores import (
    AnclaFueraDeDominio,
    DimensionesIncompatibles,
    FuncionImpropia,
    NoFinitaEnPunto,
    PrecondicionViolada,
    SelectorNoDisponible,
)

Evaluador = Callable[[VectorRacional], RealExtendido]
Selector = Callable[[VectorRacional], LinealExtendida]


@dataclass(frozen=True)
class IntervaloBinario:
    """
    Dominio [a, b] (con extremos abiertos o cerrados) para la coordenada p(1) de distribuciones
    sobre dos resultados.
    """
    a: Fraction
    b: Fraction
    incluye_a: bool = True
    incluye_b: bool = True

    def contiene(self, p1: Fraction) -> bool:
        if p1 < self.a or p1 > self.b:
            return False
        if p1 == self.a and not self.incluye_a:
            return False
        if p1 == self.b and not self.incluye_b:
            return False
        return True

    def __str__(self):
        izquierda = "[" if self.incluye_a else "("
        derecha = "]" if self.incluye_b else ")"
        return f"{izquierda}{self.a}, {self.b}{derecha}"


@dataclass(frozen=True)
class AfinExtendida:
    """
    h(x) = f(x - x₀) + β.

    Atributos:
        f (LinealExtendida): parte lineal extendida.
        ancla (tuple): x₀.
        desplazamiento (Fraction): β, siempre finito.
    """
    f: LinealExtendida
    ancla: VectorRacional
    desplazamiento: Fraction = Fraction(0)

    def __post_init__(self):
        ancla = como_vector(self.ancla)
        if len(ancla) != self.f.dim:
            raise DimensionesIncompatibles(
                f"El ancla tiene dimensión {len(ancla)}, la función {self.f.dim}")
        object.__setattr__(self, 'ancla', ancla)
        object.__setattr__(self, 'desplazamiento', Fraction(self.desplazamiento))

    @property
    def dim(self) -> int:
        return self.f.dim

    def evaluar(self, x: Iterable) -> RealExtendido:
        x = como_vector(x)
        if len(x) != self.dim:
            raise DimensionesIncompatibles(f"El punto tiene dimensión {len(x)}, se esperaba {self.dim}")
        return sumar(self.f.evaluar(restar_vectores(x, self.ancla)),
                     RealExtendido.finito(self.desplazamiento))

    def __call__(self, x: Iterable) -> RealExtendido:
        return self.evaluar(x)


@dataclass(frozen=True)
class FuncionConvexa:
    """
    Función convexa propia g: ℝ^d → ℝ ∪ {∞} con un selector de subgradientes extendidos.

    Atributos:
        dim (int): dimensión.
        evaluador: x ↦ g(x); nunca -∞.
        selector: x ↦ subgradiente extendido en x (puede lanzar SelectorNoDisponible).
        nombre (str): nombre para reportes.
        dominio: Politopo o IntervaloBinario que describe el dominio efectivo, si se conoce.
        tolerancia (Fraction): holgura para comparar valores finitos redondeados.
        selectores_alternativos (tuple): selectores adicionales que se prueban al certificar.
    """
    dim: int
    evaluador: Evaluador
    selector: Optional[Selector] = None
    nombre: str = "g"
    dominio: Optional[Union[Politopo, IntervaloBinario]] = None
    tolerancia: Fraction = Fraction(0)
    selectores_alternativos: Tuple[Selector, ...] = ()

    def evaluar(self, x: Iterable) -> RealExtendido:
        """
        Raises:
            FuncionImpropia: si el evaluador devuelve -∞.
        """
        x = como_vector(x)
        if len(x) != self.dim:
            raise DimensionesIncompatibles(f"El punto tiene dimensión {len(x)}, se esperaba {self.dim}")
        valor = self.evaluador(x)
        if valor == MENOS_INFINITO:
            raise FuncionImpropia(f"{self.nombre} vale -∞ en {tuple(map(str, x))}")
        return valor

    def subgradiente(self, x: Iterable) -> LinealExtendida:
        x = como_vector(x)
        if self.selector is None:
            raise SelectorNoDisponible(f"{self.nombre} no tiene selector de subgradientes")
        return self.selector(x)

    def en_dominio(self, x: Iterable) -> bool:
        return self.evaluar(x) != MAS_INFINITO

    def __call__(self, x: Iterable) -> RealExtendido:
        return self.evaluar(x)


@dataclass(frozen=True)
class ResultadoVerificacion:
    """
    Resultado de una verificación sobre puntos de prueba.

    Atributos:
        aprobado (bool): True si no hubo contraejemplos.
        puntos_verificados (int): cantidad de puntos revisados.
        contraejemplo: primer punto que falla.
        izquierda, derecha: los dos lados de la desigualdad que falló.
    """
    aprobado: bool
    puntos_verificados: int = 0
    contraejemplo: Optional[VectorRacional] = None
    izquierda: Optional[RealExtendido] = None
    derecha: Optional[RealExtendido] = None

    def __bool__(self):
        return self.aprobado


@dataclass(frozen=True)
class VeredictoConvexidad:
    """'strict-on-grid' o 'shared-support' con el par (a, b) y el subgradiente compartido."""
    tipo: str
    a: Optional[VectorRacional] = None
    b: Optional[VectorRacional] = None
    subgradiente: Optional[LinealExtendida] = None

    @property
    def estricta(self) -> bool:
        return self.tipo == "strict-on-grid"


def mayor_o_igual(a: RealExtendido, b: RealExtendido, tolerancia: Fraction = Fraction(0)) -> bool:
    """a ≥ b en el orden extendido, con holgura sólo cuando ambos son finitos."""
    if a.es_finito and b.es_finito:
        return a.valor + tolerancia >= b.valor
    return a >= b


def aproximadamente_igual(a: RealExtendido, b: RealExtendido, tolerancia: Fraction = Fraction(0)) -> bool:
    if a.es_finito and b.es_finito:
        return abs(a.valor - b.valor) <= tolerancia
    return a == b


def evaluar_afin(h: AfinExtendida, x: Iterable) -> RealExtendido:
    return h.evaluar(x)


def rebasar(h: AfinExtendida, x1: Iterable) -> AfinExtendida:
    """
    Reescribe h con ancla x₁ y desplazamiento f(x₁ - x₀) + β; la función no cambia.

    Raises:
        NoFinitaEnPunto: si h(x₁) no es finito.
    """
    x1 = como_vector(x1)
    valor = h.evaluar(x1)
    if valor.es_infinito:
        raise NoFinitaEnPunto(f"h vale {valor} en {tuple(map(str, x1))}")
    return AfinExtendida(h.f, x1, valor.valor)


def verificar_subgradiente(g: FuncionConvexa, x0: Iterable, f: LinealExtendida,
                           puntos: Iterable) -> ResultadoVerificacion:
    """
    Verifica g(x) ≥ g(x₀) + f(x - x₀) en cada punto de prueba.

    Raises:
        AnclaFueraDeDominio: si g(x₀) = +∞.
    """
    x0 = como_vector(x0)
    g_x0 = g.evaluar(x0)
    if g_x0.es_infinito:
        raise AnclaFueraDeDominio(f"{g.nombre}(x₀) = {g_x0}")
    contador = 0
    for x in puntos:
        x = como_vector(x)
        izquierda = g.evaluar(x)
        derecha = sumar(g_x0, f.evaluar(restar_vectores(x, x0)))
        contador += 1
        if not mayor_o_igual(izquierda, derecha, g.tolerancia):
            return ResultadoVerificacion(False, contador, x, izquierda, derecha)
    return ResultadoVerificacion(True, contador)


def soporta(h: AfinExtendida, g: FuncionConvexa, x0: Iterable, puntos: Iterable) -> ResultadoVerificacion:
    """Verifica h(x₀) = g(x₀) y h(x) ≤ g(x) en los puntos de prueba."""
    x0 = como_vector(x0)
    h_x0, g_x0 = h.evaluar(x0), g.evaluar(x0)
    if not aproximadamente_igual(h_x0, g_x0, g.tolerancia):
        return ResultadoVerificacion(False, 1, x0, h_x0, g_x0)
    contador = 1
    for x in puntos:
        x = como_vector(x)
        izquierda, derecha = g.evaluar(x), h.evaluar(x)
        contador += 1
        if not mayor_o_igual(izquierda, derecha, g.tolerancia):
            return ResultadoVerificacion(False, contador, x, izquierda, derecha)
    return ResultadoVerificacion(True, contador)


def evaluar_supremo_familia(familia: Sequence[AfinExtendida], x: Iterable) -> RealExtendido:
    """Supremo puntual de una familia finita; la familia vacía da -∞."""
    x = como_vector(x)
    return supremo(h.evaluar(x) for h in familia)


def familia_indicadora(conjunto: Politopo, x: Iterable, escalera: Sequence) -> List[AfinExtendida]:
    """
    Funciones h_β(x') = f(x' - x) + β con f = -∞ sobre el conjunto trasladado, una por cada β de
    la escalera. Valen β en x y -∞ sobre el conjunto.

    Raises:
        ContieneOrigen: si x pertenece al conjunto.
    """
    x = como_vector(x)
    f = indicadora_negativa(conjunto.trasladar(x))
    return [AfinExtendida(f, x, Fraction(beta)) for beta in escalera]


def familia_supremo(g: FuncionConvexa, puntos: Iterable, escalera: Sequence = (0, 1, 10, 100)) -> List[AfinExtendida]:
    """
    Familia de funciones afines extendidas cuyo supremo reproduce g en los puntos dados: la función
    de soporte del selector en cada punto del dominio y una familia indicadora en cada punto fuera
    de él.

    Raises:
        PrecondicionViolada: si hay puntos fuera del dominio y g no declara un Politopo como dominio.
    """
    familia = []
    for x in puntos:
        x = como_vector(x)
        valor = g.evaluar(x)
        if valor.es_finito:
            familia.append(AfinExtendida(g.subgradiente(x), x, valor.valor))
            continue
        if not isinstance(g.dominio, Politopo):
            raise PrecondicionViolada(f"{g.nombre} no declara un politopo como dominio efectivo")
        familia.extend(familia_indicadora(g.dominio, x, escalera))
    return familia


def verificar_familia_supremo(g: FuncionConvexa, familia: Sequence[AfinExtendida], puntos: Iterable,
                              escalera: Sequence = (0, 1, 10, 100)) -> ResultadoVerificacion:
    """
    En puntos del dominio el supremo de la familia debe coincidir con g; fuera de él debe
    alcanzar al menos el escalón más alto.
    """
    tope = RealExtendido.finito(max(Fraction(b) for b in escalera))
    contador = 0
    for x in puntos:
        x = como_vector(x)
        valor_g = g.evaluar(x)
        valor_familia = evaluar_supremo_familia(familia, x)
        contador += 1
        if valor_g.es_finito:
            correcto = aproximadamente_igual(valor_familia, valor_g, g.tolerancia)
        else:
            correcto = valor_familia >= tope
        if not correcto:
            return ResultadoVerificacion(False, contador, x, valor_familia, valor_g)
    return ResultadoVerificacion(True, contador)


def sondear_convexidad_estricta(g: FuncionConvexa, grilla: Sequence) -> VeredictoConvexidad:
    """
    Busca dos puntos distintos a, b de la grilla que compartan soporte: g(b) = g(a) + f_a(b - a),
    con f_a el subgradiente del selector en a. Los puntos repetidos se consideran una sola vez.

    Raises:
        SelectorNoDisponible: si el selector no responde en algún punto.
        AnclaFueraDeDominio: si algún punto de la grilla está fuera del dominio efectivo.
    """
    grilla = list(dict.fromkeys(como_vector(x) for x in grilla))
    valores = []
    for x in grilla:
        valor = g.evaluar(x)
        if valor.es_infinito:
            raise AnclaFueraDeDominio(f"{tuple(map(str, x))} está fuera del dominio de {g.nombre}")
        valores.append(valor)
    subgradientes = [g.subgradiente(x) for x in grilla]

    for i, a in enumerate(grilla):
        for j, b in enumerate(grilla):
            if i == j:
                continue
            prediccion = sumar(valores[i], subgradientes[i].evaluar(restar_vectores(b, a)))
            if aproximadamente_igual(valores[j], prediccion, g.tolerancia):
                return VeredictoConvexidad("shared-support", a, b, subgradientes[i])
    return VeredictoConvexidad("strict-on-grid")

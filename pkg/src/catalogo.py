"""
Catálogo de funciones convexas con selectores analíticos de subgradientes extendidos.

Incluye la entropía negativa (regla logarítmica), la función cuadrática (regla de Brier), las
reglas inducidas por funciones de conjuntos sobre el soporte, las variantes comprimidas de la
entropía binaria y los ejemplos de referencia en ℝ³ y ℝ¹.

Los valores trascendentes (logaritmos) se calculan con mpmath a `precision + 10` dígitos de
trabajo y se redondean al más cercano con `precision` cifras significativas antes de convertirse
en Fraction. Los infinitos se mantienen exactos.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, FrozenSet, List, Optional, Tuple

import mpmath

from src.convexas import AfinExtendida, FuncionConvexa, IntervaloBinario
from src.geometria import Politopo, VectorRacional, vector_canonico
from src.lineal_extendida import LinealExtendida, cero, lineal
from src.puntajes import ConjuntoResultados
from src.reales_extendidos import MAS_INFINITO, RealExtendido, parsear_racional
from src.utils.errores import (
    ErrorEntrada,
    IntervaloInvalido,
    NoBinario,
    NoMonotona,
    SelectorNoDisponible,
)
from src.utils.muestreo import grilla_farey

PRECISION_POR_DEFECTO = 50
RESULTADOS_BINARIOS = ConjuntoResultados(("0", "1"))
RESULTADOS_POR_DEFECTO = ConjuntoResultados(("a", "b"))


def tolerancia_para(precision: int) -> Fraction:
    """Holgura de comparación para valores redondeados: 1e-30 a 50 dígitos."""
    return Fraction(1, 10 ** max(precision - 20, precision // 2))


def _a_racional(valor, precision: int) -> Fraction:
    return Fraction(mpmath.nstr(valor, precision))


def _mpf(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def log_racional(x: Fraction, precision: int = PRECISION_POR_DEFECTO) -> Fraction:
    """log(x) redondeado a `precision` cifras significativas; x > 0."""
    with mpmath.workdps(precision + 10):
        return _a_racional(mpmath.log(_mpf(x)), precision)


def entropia_racional(probs: VectorRacional, precision: int = PRECISION_POR_DEFECTO) -> Fraction:
    """Σ p log p con 0 · log 0 = 0, redondeada una sola vez al final."""
    with mpmath.workdps(precision + 10):
        total = mpmath.mpf(0)
        for p in probs:
            if p > 0:
                valor = _mpf(p)
                total += valor * mpmath.log(valor)
        return _a_racional(total, precision)


def en_simplex(x: VectorRacional) -> bool:
    return all(c >= 0 for c in x) and sum(x) == 1


def simplex(n: int) -> Politopo:
    """El símplex de probabilidad como politopo de vértices δ_y."""
    return Politopo(tuple(vector_canonico(n, y) for y in range(n)))


def _direcciones_fuera_del_soporte(x: VectorRacional) -> Tuple[VectorRacional, ...]:
    return tuple(vector_canonico(len(x), y, -1) for y, c in enumerate(x) if c == 0)


@dataclass(frozen=True)
class EntradaCatalogo:
    """
    Función convexa con nombre, procedencia y grilla por defecto.

    Atributos:
        nombre (str): nombre con el que se la busca desde la línea de comandos.
        funcion (FuncionConvexa): evaluador y selector.
        notas (str): de dónde sale la función.
        resultados: conjunto de resultados si la función está definida sobre distribuciones.
        generar_grilla: denominador ↦ puntos del dominio efectivo para pruebas.
        punto_referencia, subgradiente_referencia, afin_referencia: ejemplo trabajado asociado.
    """
    nombre: str
    funcion: FuncionConvexa
    notas: str = ""
    resultados: Optional[ConjuntoResultados] = None
    generar_grilla: Optional[Callable[[int], List[VectorRacional]]] = None
    punto_referencia: Optional[VectorRacional] = None
    subgradiente_referencia: Optional[LinealExtendida] = None
    afin_referencia: Optional[AfinExtendida] = None

    def grilla(self, denominador: int = 8) -> List[VectorRacional]:
        if self.generar_grilla is not None:
            return self.generar_grilla(denominador)
        if self.resultados is None:
            return []
        return [p for p in grilla_farey(self.resultados.n, denominador)
                if self.funcion.evaluar(p).es_finito]

    @property
    def es_binaria(self) -> bool:
        return self.resultados is not None and self.resultados.n == 2


def entropia_negativa(resultados: ConjuntoResultados = RESULTADOS_POR_DEFECTO,
                      precision: int = PRECISION_POR_DEFECTO) -> EntradaCatalogo:
    """
    g(p) = Σ p(y) log p(y) en el símplex, +∞ fuera. Su regla subtangente es S(p, y) = log p(y).

    Selector: cola 1 + log p(y) sobre el soporte y una dirección -δ_y por cada y fuera del soporte.
    """
    n = resultados.n

    def evaluador(x: VectorRacional) -> RealExtendido:
        if not en_simplex(x):
            return MAS_INFINITO
        return RealExtendido.finito(entropia_racional(x, precision))

    def selector(x: VectorRacional) -> LinealExtendida:
        if not en_simplex(x):
            raise SelectorNoDisponible("La entropía negativa sólo tiene subgradientes en el símplex")
        cola = tuple(1 + log_racional(c, precision) if c > 0 else Fraction(0) for c in x)
        return LinealExtendida(n, _direcciones_fuera_del_soporte(x), cola)

    funcion = FuncionConvexa(n, evaluador, selector, "neg-entropy", simplex(n), tolerancia_para(precision))
    return EntradaCatalogo("neg-entropy", funcion, "entropía negativa; regla logarítmica", resultados)


def brier(resultados: ConjuntoResultados = RESULTADOS_POR_DEFECTO) -> EntradaCatalogo:
    """g(q) = Σ q(y)² - 1 en todo ℝ^n con gradiente 2q. Su regla subtangente es -‖δ_y - p‖²."""
    n = resultados.n

    def evaluador(x: VectorRacional) -> RealExtendido:
        return RealExtendido.finito(sum((c * c for c in x), Fraction(0)) - 1)

    def selector(x: VectorRacional) -> LinealExtendida:
        return lineal(tuple(2 * c for c in x))

    funcion = FuncionConvexa(n, evaluador, selector, "brier")
    return EntradaCatalogo("brier", funcion, "regla cuadrática", resultados,
                           generar_grilla=lambda denominador: grilla_farey(n, denominador))


def _subconjuntos(n: int):
    for k in range(n + 1):
        for combinacion in combinations(range(n), k):
            yield frozenset(combinacion)


def regla_funcion_conjunto(resultados: ConjuntoResultados,
                           funcion_conjunto: Callable[[FrozenSet[str]], object],
                           nombre: str = "set-function") -> EntradaCatalogo:
    """
    g(p) = G(Supp p) en el símplex, +∞ fuera. G debe ser no creciente respecto de la inclusión.

    Selector: direcciones -δ_y fuera del soporte y cola nula. La regla subtangente asigna G(Supp p)
    a los resultados del soporte y -∞ al resto.

    Raises:
        NoMonotona: con el primer par X ⊂ X ∪ {y} donde G crece.
    """
    n = resultados.n
    etiquetas = resultados.etiquetas

    def valor(indices) -> Fraction:
        return parsear_racional(funcion_conjunto(frozenset(etiquetas[i] for i in indices)))

    for subconjunto in _subconjuntos(n):
        if not subconjunto:
            continue
        for y in range(n):
            if y in subconjunto:
                continue
            mayor = subconjunto | {y}
            if valor(mayor) > valor(subconjunto):
                raise NoMonotona(
                    f"G({sorted(etiquetas[i] for i in mayor)}) > G({sorted(etiquetas[i] for i in subconjunto)})")

    def evaluador(x: VectorRacional) -> RealExtendido:
        if not en_simplex(x):
            return MAS_INFINITO
        return RealExtendido.finito(valor(i for i, c in enumerate(x) if c > 0))

    def selector(x: VectorRacional) -> LinealExtendida:
        if not en_simplex(x):
            raise SelectorNoDisponible(f"{nombre} sólo tiene subgradientes en el símplex")
        return LinealExtendida(n, _direcciones_fuera_del_soporte(x))

    funcion = FuncionConvexa(n, evaluador, selector, nombre, simplex(n))
    return EntradaCatalogo(nombre, funcion, "función de conjunto sobre el soporte", resultados)


def tamano_soporte(resultados: ConjuntoResultados = RESULTADOS_POR_DEFECTO) -> EntradaCatalogo:
    """G(X) = |Y| - |X|: una predicción con soporte |Y| - k recibe k puntos."""
    n = resultados.n
    return regla_funcion_conjunto(resultados, lambda conjunto: n - len(conjunto), "support-size")


def entropia_negativa_comprimida(a, b, incluye_a: bool = True, incluye_b: bool = True,
                                 precision: int = PRECISION_POR_DEFECTO) -> EntradaCatalogo:
    """
    Entropía binaria trasladada al intervalo [a, b] de la coordenada p(1): g(p) = H(s) con
    s = (p(1) - a)/(b - a) y H(s) = s log s + (1 - s) log(1 - s).

    Selector: gradiente finito en el interior; en un extremo incluido el soporte es vertical
    (-δ₁ en a, -δ₀ en b) con cola 1/(b - a) sobre la coordenada restante.

    Raises:
        IntervaloInvalido: si no se cumple 0 ≤ a < b ≤ 1.
    """
    a, b = Fraction(a), Fraction(b)
    if not (0 <= a < b <= 1):
        raise IntervaloInvalido(f"Se requiere 0 ≤ a < b ≤ 1, se recibió a={a}, b={b}")
    intervalo = IntervaloBinario(a, b, incluye_a, incluye_b)
    ancho = b - a

    def comprimir(x: VectorRacional) -> Optional[Fraction]:
        if not en_simplex(x) or not intervalo.contiene(x[1]):
            return None
        return (x[1] - a) / ancho

    def evaluador(x: VectorRacional) -> RealExtendido:
        s = comprimir(x)
        if s is None:
            return MAS_INFINITO
        return RealExtendido.finito(entropia_racional((1 - s, s), precision))

    def selector(x: VectorRacional) -> LinealExtendida:
        s = comprimir(x)
        if s is None:
            raise SelectorNoDisponible(f"p(1) = {x[1]} fuera de {intervalo}")
        if s == 0:
            return LinealExtendida(2, ((Fraction(0), Fraction(-1)),), (1 / ancho, Fraction(0)))
        if s == 1:
            return LinealExtendida(2, ((Fraction(-1), Fraction(0)),), (Fraction(0), 1 / ancho))
        cola = ((1 + log_racional(1 - s, precision)) / ancho, (1 + log_racional(s, precision)) / ancho)
        return lineal(cola)

    extremos = f"{'closed' if incluye_a else 'open'}-{'closed' if incluye_b else 'open'}"
    nombre = f"squeezed:{a},{b},{extremos}"
    funcion = FuncionConvexa(2, evaluador, selector, nombre, intervalo, tolerancia_para(precision))
    return EntradaCatalogo(nombre, funcion, f"entropía binaria comprimida a {intervalo}", RESULTADOS_BINARIOS)


def capas_estrictas() -> EntradaCatalogo:
    """
    Ejemplo binario estrictamente propio con dos niveles: g(q) = Σ q² - 1 en el interior del
    símplex, g = 1 en ambos vértices y +∞ fuera del símplex.
    """

    def evaluador(x: VectorRacional) -> RealExtendido:
        if not en_simplex(x):
            return MAS_INFINITO
        if 0 in x:
            return RealExtendido.finito(1)
        return RealExtendido.finito(sum((c * c for c in x), Fraction(0)) - 1)

    def selector(x: VectorRacional) -> LinealExtendida:
        if not en_simplex(x):
            raise SelectorNoDisponible("strict-layers sólo tiene subgradientes en el símplex")
        if 0 in x:
            return LinealExtendida(2, _direcciones_fuera_del_soporte(x))
        return lineal(tuple(2 * c for c in x))

    funcion = FuncionConvexa(2, evaluador, selector, "strict-layers", simplex(2))
    return EntradaCatalogo("strict-layers", funcion,
                           "cuadrática en el interior, constante 1 en los vértices", RESULTADOS_BINARIOS)


def _introduccion() -> EntradaCatalogo:
    """
    g(x, y, z) = ∞ si z > 0; 0 si z < 0; y sobre z = 0: ∞ si y > 0, 0 si y < 0, x²/2 si y = 0.
    En (1, 0, 0) tiene como subgradiente extendido a f con direcciones (0,0,1), (0,1,0) y cola (1,0,0).
    """

    def evaluador(x: VectorRacional) -> RealExtendido:
        if x[2] > 0 or (x[2] == 0 and x[1] > 0):
            return MAS_INFINITO
        if x[2] < 0 or x[1] < 0:
            return RealExtendido.finito(0)
        return RealExtendido.finito(x[0] * x[0] / 2)

    direcciones = ((Fraction(0), Fraction(0), Fraction(1)), (Fraction(0), Fraction(1), Fraction(0)))

    def selector(x: VectorRacional) -> LinealExtendida:
        if evaluador(x) == MAS_INFINITO:
            raise SelectorNoDisponible("Fuera del dominio efectivo")
        if x[2] < 0 or x[1] < 0:
            return cero(3)
        return LinealExtendida(3, direcciones, (x[0], Fraction(0), Fraction(0)))

    def generar_grilla(denominador: int) -> List[VectorRacional]:
        pasos = [Fraction(k, denominador) for k in range(-denominador, denominador + 1)]
        puntos = [(x, Fraction(0), Fraction(0)) for x in pasos]
        puntos += [(x, y, Fraction(0)) for x in (Fraction(-1), Fraction(1)) for y in (Fraction(-1), Fraction(-1, 2))]
        puntos += [(x, y, Fraction(-1)) for x in (Fraction(-1), Fraction(1)) for y in (Fraction(-1), Fraction(1))]
        return puntos

    funcion = FuncionConvexa(3, evaluador, selector, "intro-g")
    f = LinealExtendida(3, direcciones, (1, 0, 0))
    return EntradaCatalogo("intro-g", funcion, "función convexa discontinua en ℝ³", None, generar_grilla,
                           (Fraction(1), Fraction(0), Fraction(0)), f)


def _escalon() -> EntradaCatalogo:
    """g(x) = 0 si x < 1, 1 si x = 1, ∞ si x > 1, con soporte vertical f(z) = ∞ · z en x = 1."""
    uno = Fraction(1)

    def evaluador(x: VectorRacional) -> RealExtendido:
        if x[0] > uno:
            return MAS_INFINITO
        return RealExtendido.finito(1 if x[0] == uno else 0)

    f = LinealExtendida(1, ((uno,),))

    def selector(x: VectorRacional) -> LinealExtendida:
        if x[0] > uno:
            raise SelectorNoDisponible("Fuera del dominio efectivo")
        return f if x[0] == uno else cero(1)

    def generar_grilla(denominador: int) -> List[VectorRacional]:
        return [(Fraction(k, denominador),) for k in range(-2 * denominador, denominador + 1)]

    funcion = FuncionConvexa(1, evaluador, selector, "step")
    h = AfinExtendida(f, (uno,), uno)
    return EntradaCatalogo("step", funcion, "escalón en ℝ con soporte vertical en x = 1", None,
                           generar_grilla, (uno,), f, h)


def hiperplano(resultados: ConjuntoResultados = RESULTADOS_POR_DEFECTO) -> EntradaCatalogo:
    """
    g(z) = z · 1⃗ - 1 con selector f_p(z) = z · 1⃗: regla subtangente nula, regla de subgradiente 1.
    """
    n = resultados.n
    unos = tuple(Fraction(1) for _ in range(n))

    def evaluador(x: VectorRacional) -> RealExtendido:
        return RealExtendido.finito(sum(x, Fraction(0)) - 1)

    funcion = FuncionConvexa(n, evaluador, lambda x: lineal(unos), "hyperplane")
    return EntradaCatalogo("hyperplane", funcion, "hiperplano por el símplex", resultados,
                           generar_grilla=lambda denominador: grilla_farey(n, denominador))


def funcion_nula(resultados: ConjuntoResultados = RESULTADOS_POR_DEFECTO) -> EntradaCatalogo:
    """g ≡ 0 con selector nulo; su regla de subgradiente es la regla nula."""
    n = resultados.n
    funcion = FuncionConvexa(n, lambda x: RealExtendido.finito(0), lambda x: cero(n), "zero")
    return EntradaCatalogo("zero", funcion, "función nula", resultados,
                           generar_grilla=lambda denominador: grilla_farey(n, denominador))


def hendrickson(resultados: ConjuntoResultados = RESULTADOS_POR_DEFECTO,
                precision: int = PRECISION_POR_DEFECTO) -> EntradaCatalogo:
    """
    g(p) = Σ p(y) log(p(y)/Σ p) en el ortante no negativo (g(0) = 0), +∞ fuera. Positivamente
    homogénea; su regla de subgradiente es la regla logarítmica.
    """
    n = resultados.n

    def evaluador(x: VectorRacional) -> RealExtendido:
        if any(c < 0 for c in x):
            return MAS_INFINITO
        total = sum(x, Fraction(0))
        if total == 0:
            return RealExtendido.finito(0)
        normalizada = tuple(c / total for c in x)
        return RealExtendido.finito(total * entropia_racional(normalizada, precision))

    def selector(x: VectorRacional) -> LinealExtendida:
        if any(c < 0 for c in x):
            raise SelectorNoDisponible("Fuera del ortante no negativo")
        total = sum(x, Fraction(0))
        if total == 0:
            return LinealExtendida(n, (tuple(Fraction(-1) for _ in range(n)),))
        cola = tuple(log_racional(c / total, precision) if c > 0 else Fraction(0) for c in x)
        return LinealExtendida(n, _direcciones_fuera_del_soporte(x), cola)

    def generar_grilla(denominador: int) -> List[VectorRacional]:
        distribuciones = grilla_farey(n, denominador)
        return distribuciones + [tuple(2 * c for c in p) for p in distribuciones]

    funcion = FuncionConvexa(n, evaluador, selector, "hendrickson", tolerancia=tolerancia_para(precision))
    return EntradaCatalogo("hendrickson", funcion, "log positivamente homogénea en el ortante", resultados,
                           generar_grilla)


def ejemplos_de_referencia(resultados: ConjuntoResultados = RESULTADOS_POR_DEFECTO,
                           precision: int = PRECISION_POR_DEFECTO) -> List[EntradaCatalogo]:
    """Los ejemplos trabajados: ℝ³ de la introducción, escalón en ℝ, hiperplano, nula y homogénea."""
    return [_introduccion(), _escalon(), hiperplano(resultados), funcion_nula(resultados),
            hendrickson(resultados, precision)]


def _parsear_comprimida(argumentos: str, precision: int) -> EntradaCatalogo:
    partes = [parte.strip() for parte in argumentos.split(',')]
    if len(partes) not in (2, 3):
        raise ErrorEntrada(f"Formato esperado squeezed:a,b[,closed-open], se recibió '{argumentos}'")
    try:
        a, b = parsear_racional(partes[0]), parsear_racional(partes[1])
    except ValueError as e:
        raise ErrorEntrada(str(e))
    extremos = partes[2] if len(partes) == 3 else "closed-closed"
    opciones = {'closed': True, 'open': False, 'cerrado': True, 'abierto': False}
    try:
        izquierda, derecha = (opciones[lado] for lado in extremos.split('-'))
    except (KeyError, ValueError):
        raise ErrorEntrada(f"Extremos inválidos '{extremos}': use closed|open-closed|open")
    return entropia_negativa_comprimida(a, b, izquierda, derecha, precision)


ALIAS = {
    'neg-entropy': 'neg-entropy', 'entropia-negativa': 'neg-entropy',
    'brier': 'brier',
    'support-size': 'support-size', 'tamano-soporte': 'support-size',
    'strict-layers': 'strict-layers', 'capas-estrictas': 'strict-layers',
    'hyperplane': 'hyperplane', 'hiperplano': 'hyperplane',
    'zero': 'zero', 'cero': 'zero',
    'hendrickson': 'hendrickson',
    'intro-g': 'intro-g', 'introduccion': 'intro-g',
    'step': 'step', 'escalon': 'step',
}

NOMBRES_BINARIOS = ('strict-layers',)


def nombres_disponibles() -> List[str]:
    return sorted(set(ALIAS.values())) + ['squeezed:a,b,closed-closed']


def buscar_entrada(nombre: str, resultados: Optional[ConjuntoResultados] = None,
                   precision: int = PRECISION_POR_DEFECTO) -> EntradaCatalogo:
    """
    Busca una entrada por nombre (en inglés o castellano).

    Raises:
        ErrorEntrada: si el nombre no existe.
        NoBinario: si la entrada es binaria y se pidieron otros resultados.
    """
    nombre = nombre.strip()
    prefijo, _, argumentos = nombre.partition(':')
    if prefijo in ('squeezed', 'comprimida'):
        if resultados is not None and resultados.n != 2:
            raise NoBinario(f"{nombre} sólo admite dos resultados")
        return _parsear_comprimida(argumentos, precision)

    canonico = ALIAS.get(nombre.lower())
    if canonico is None:
        raise ErrorEntrada(f"Entrada desconocida '{nombre}'. Disponibles: {', '.join(nombres_disponibles())}")
    if canonico in NOMBRES_BINARIOS:
        if resultados is not None and resultados.n != 2:
            raise NoBinario(f"{nombre} sólo admite dos resultados")
        return capas_estrictas()

    resultados = resultados or RESULTADOS_POR_DEFECTO
    constructores = {
        'neg-entropy': lambda: entropia_negativa(resultados, precision),
        'brier': lambda: brier(resultados),
        'support-size': lambda: tamano_soporte(resultados),
        'hyperplane': lambda: hiperplano(resultados),
        'zero': lambda: funcion_nula(resultados),
        'hendrickson': lambda: hendrickson(resultados, precision),
        'intro-g': _introduccion,
        'step': _escalon,
    }
    return constructores[canonico]()

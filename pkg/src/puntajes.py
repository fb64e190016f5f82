"""
Reglas de puntaje sobre un conjunto finito de resultados.

Construcción de reglas subtangentes y de subgradiente a partir de funciones convexas, puntajes
esperados extendidos, verificación de regularidad y propiedad sobre grillas finitas, pruebas de
finitud interior, certificados de Lipschitz local interior y reconstrucción de la función
convexa asociada a una tabla propia.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.convexas import (
    FuncionConvexa,
    Selector,
    aproximadamente_igual,
    mayor_o_igual,
)
from src.geometria import VectorRacional, como_vector, restar_vectores, vector_canonico
from src.lineal_extendida import LinealExtendida
from src.reales_extendidos import (
    MAS_INFINITO,
    MENOS_INFINITO,
    RealExtendido,
    como_real_extendido,
    escalar,
    sumar,
    sumar_todos,
    supremo,
)
from src.utils.errores import (
    DimensionesIncompatibles,
    ErrorEntrada,
    EtiquetaDesconocida,
    NoPropia,
    NoRegular,
    PrediccionDesconocida,
    PrediccionFueraDeDominio,
    SelectorNoDisponible,
)


@dataclass(frozen=True)
class ConjuntoResultados:
    """
    Conjunto ordenado de etiquetas de resultados. El orden fija el de las coordenadas.
    """
    etiquetas: Tuple[str, ...]

    def __post_init__(self):
        etiquetas = tuple(str(e) for e in self.etiquetas)
        if not etiquetas:
            raise ErrorEntrada("El conjunto de resultados no puede estar vacío")
        if len(set(etiquetas)) != len(etiquetas):
            raise ErrorEntrada("Etiquetas de resultados duplicadas")
        object.__setattr__(self, 'etiquetas', etiquetas)

    @property
    def n(self) -> int:
        return len(self.etiquetas)

    def indice(self, etiqueta: str) -> int:
        try:
            return self.etiquetas.index(str(etiqueta))
        except ValueError:
            raise EtiquetaDesconocida(f"Etiqueta '{etiqueta}' fuera de {list(self.etiquetas)}")

    def __iter__(self):
        return iter(self.etiquetas)

    def __len__(self):
        return self.n


@dataclass(frozen=True)
class Distribucion:
    """
    Distribución de probabilidad racional: coordenadas no negativas que suman exactamente 1.
    """
    probs: VectorRacional

    def __post_init__(self):
        probs = como_vector(self.probs)
        if not probs:
            raise PrediccionFueraDeDominio("Distribución vacía")
        if any(p < 0 for p in probs) or sum(probs) != 1:
            raise PrediccionFueraDeDominio(f"{tuple(map(str, probs))} no pertenece al símplex")
        object.__setattr__(self, 'probs', probs)

    @property
    def soporte(self) -> Tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.probs) if p > 0)

    def __len__(self):
        return len(self.probs)

    def __iter__(self):
        return iter(self.probs)

    def __getitem__(self, i):
        return self.probs[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.probs)) + ")"


def como_distribucion(p: Union[Distribucion, Iterable]) -> Distribucion:
    return p if isinstance(p, Distribucion) else Distribucion(tuple(p))


@dataclass(frozen=True)
class TablaPuntajes:
    """
    Matriz predicciones × resultados con valores en ℝ ∪ {±∞}.

    La regularidad (ningún +∞) se recalcula siempre a partir de los valores.
    """
    resultados: ConjuntoResultados
    predicciones: Tuple[Distribucion, ...]
    valores: Tuple[Tuple[RealExtendido, ...], ...]

    def __post_init__(self):
        predicciones = tuple(como_distribucion(p) for p in self.predicciones)
        valores = tuple(tuple(como_real_extendido(v) for v in fila) for fila in self.valores)
        if len(valores) != len(predicciones):
            raise DimensionesIncompatibles(
                f"{len(predicciones)} predicciones y {len(valores)} filas de valores")
        for i, (p, fila) in enumerate(zip(predicciones, valores)):
            if len(p) != self.resultados.n or len(fila) != self.resultados.n:
                raise DimensionesIncompatibles(f"La fila {i} no tiene {self.resultados.n} columnas")
        object.__setattr__(self, 'predicciones', predicciones)
        object.__setattr__(self, 'valores', valores)

    @property
    def regular(self) -> bool:
        return not self.entradas_infinitas()

    def entradas_infinitas(self) -> List[Tuple[Distribucion, str]]:
        """Pares (predicción, etiqueta) con valor +∞."""
        return [(p, etiqueta)
                for p, fila in zip(self.predicciones, self.valores)
                for etiqueta, v in zip(self.resultados, fila) if v == MAS_INFINITO]

    def fila(self, p) -> int:
        p = como_distribucion(p)
        try:
            return self.predicciones.index(p)
        except ValueError:
            raise PrediccionDesconocida(f"{p} no está entre las predicciones de la tabla")

    def valor(self, p, etiqueta: str) -> RealExtendido:
        return self.valores[self.fila(p)][self.resultados.indice(etiqueta)]


def delta(etiqueta: str, resultados: ConjuntoResultados) -> Distribucion:
    """Distribución con toda la masa en `etiqueta`."""
    return Distribucion(vector_canonico(resultados.n, resultados.indice(etiqueta)))


def _verificar_dimension(g: FuncionConvexa, resultados: ConjuntoResultados):
    if g.dim != resultados.n:
        raise DimensionesIncompatibles(f"{g.nombre} tiene dimensión {g.dim}, hay {resultados.n} resultados")


def _subgradiente(g: FuncionConvexa, p: Distribucion, selector: Optional[Selector]) -> LinealExtendida:
    return selector(p.probs) if selector is not None else g.subgradiente(p.probs)


def regla_subtangente(g: FuncionConvexa, predicciones: Iterable, resultados: ConjuntoResultados,
                      selector: Optional[Selector] = None) -> TablaPuntajes:
    """
    S(p, y) = g(p) + f_p(δ_y - p). La tabla puede no ser regular; se reporta, no se rechaza.

    Raises:
        PrediccionFueraDeDominio: si g(p) = +∞.
        SelectorNoDisponible: si no hay subgradiente en p.
    """
    _verificar_dimension(g, resultados)
    predicciones = [como_distribucion(p) for p in predicciones]
    filas = []
    for p in predicciones:
        g_p = g.evaluar(p.probs)
        if g_p.es_infinito:
            raise PrediccionFueraDeDominio(f"{g.nombre}({p}) = {g_p}")
        f_p = _subgradiente(g, p, selector)
        filas.append(tuple(sumar(g_p, f_p.evaluar(restar_vectores(vector_canonico(resultados.n, y), p.probs)))
                           for y in range(resultados.n)))
    return TablaPuntajes(resultados, tuple(predicciones), tuple(filas))


def regla_subgradiente(g: FuncionConvexa, predicciones: Iterable, resultados: ConjuntoResultados,
                       selector: Optional[Selector] = None) -> TablaPuntajes:
    """S(p, y) = f_p(δ_y)."""
    _verificar_dimension(g, resultados)
    predicciones = [como_distribucion(p) for p in predicciones]
    filas = []
    for p in predicciones:
        g_p = g.evaluar(p.probs)
        if g_p.es_infinito:
            raise PrediccionFueraDeDominio(f"{g.nombre}({p}) = {g_p}")
        f_p = _subgradiente(g, p, selector)
        filas.append(tuple(f_p.evaluar(vector_canonico(resultados.n, y)) for y in range(resultados.n)))
    return TablaPuntajes(resultados, tuple(predicciones), tuple(filas))


def tabla_desde_funcion(resultados: ConjuntoResultados, predicciones: Iterable,
                        regla: Callable[[Distribucion, str], object]) -> TablaPuntajes:
    """Tabla con S(p, y) = regla(p, y) para una regla dada como función."""
    predicciones = [como_distribucion(p) for p in predicciones]
    filas = tuple(tuple(como_real_extendido(regla(p, y)) for y in resultados) for p in predicciones)
    return TablaPuntajes(resultados, tuple(predicciones), filas)


def _exigir_regular(tabla: TablaPuntajes):
    if not tabla.regular:
        p, etiqueta = tabla.entradas_infinitas()[0]
        raise NoRegular(f"S({p}, {etiqueta}) = +∞")


def puntaje_esperado_extendido(tabla: TablaPuntajes, p) -> LinealExtendida:
    """
    Función lineal extendida S_p con S_p(δ_y) = S(p, y) para todo y: una dirección -δ_y por cada
    resultado con puntaje -∞ (en el orden de las etiquetas) y cola Σ S(p, y) δ_y sobre el resto.

    Raises:
        NoRegular, PrediccionDesconocida
    """
    _exigir_regular(tabla)
    fila = tabla.valores[tabla.fila(p)]
    n = tabla.resultados.n
    direcciones = tuple(vector_canonico(n, y, -1) for y, v in enumerate(fila) if v == MENOS_INFINITO)
    cola = tuple(v.valor if v.es_finito else Fraction(0) for v in fila)
    return LinealExtendida(n, direcciones, cola)


def puntaje_esperado(tabla: TablaPuntajes, p, q) -> RealExtendido:
    """
    S(p; q) = Σ_y q(y) S(p, y), con 0 · (-∞) = 0.

    Raises:
        NoRegular, PrediccionDesconocida
    """
    _exigir_regular(tabla)
    return _puntaje_fila(tabla.valores[tabla.fila(p)], como_distribucion(q))


def _puntaje_fila(fila: Sequence[RealExtendido], q: Distribucion) -> RealExtendido:
    return sumar_todos(escalar(q_y, v) for q_y, v in zip(q.probs, fila))


@dataclass(frozen=True)
class VeredictoPropiedad:
    """
    'strictly-proper-on-grid', 'proper-on-grid' o 'violation' con el par (p, q) y los puntajes
    S(p; q) y S(q; q).
    """
    tipo: str
    p: Optional[Distribucion] = None
    q: Optional[Distribucion] = None
    puntaje_pq: Optional[RealExtendido] = None
    puntaje_qq: Optional[RealExtendido] = None

    @property
    def propia(self) -> bool:
        return self.tipo != "violation"

    @property
    def estricta(self) -> bool:
        return self.tipo == "strictly-proper-on-grid"


def verificar_propiedad(tabla: TablaPuntajes, tolerancia: Fraction = Fraction(0)) -> VeredictoPropiedad:
    """
    Compara S(p; q) con S(q; q) para todo par ordenado p ≠ q de predicciones.

    Raises:
        NoRegular
    """
    _exigir_regular(tabla)
    predicciones = tabla.predicciones
    verdaderos = [_puntaje_fila(fila, q) for fila, q in zip(tabla.valores, predicciones)]
    estricta = True
    for i, p in enumerate(predicciones):
        for j, q in enumerate(predicciones):
            if i == j:
                continue
            puntaje_pq = _puntaje_fila(tabla.valores[i], q)
            if not mayor_o_igual(verdaderos[j], puntaje_pq, tolerancia):
                return VeredictoPropiedad("violation", p, q, puntaje_pq, verdaderos[j])
            if aproximadamente_igual(verdaderos[j], puntaje_pq, tolerancia):
                estricta = False
    return VeredictoPropiedad("strictly-proper-on-grid" if estricta else "proper-on-grid")


def interior_finita(f: LinealExtendida, p) -> bool:
    """
    Condición sobre los parámetros: (1) cada dirección es constante sobre las coordenadas del
    soporte de p; (2) para y fuera del soporte, la primera dirección que distingue a y del soporte
    le da un valor menor.
    """
    p = como_distribucion(p)
    if f.dim != len(p):
        raise DimensionesIncompatibles(f"La función tiene dimensión {f.dim}, la distribución {len(p)}")
    soporte = p.soporte
    referencia = soporte[0]
    for v in f.direcciones:
        if any(v[y] != v[referencia] for y in soporte):
            return False
    for y in range(len(p)):
        if y in soporte:
            continue
        for v in f.direcciones:
            if v[y] != v[referencia]:
                if v[y] > v[referencia]:
                    return False
                break
    return True


def interior_finita_por_evaluacion(f: LinealExtendida, p) -> bool:
    """f(δ_y - p) ≠ +∞ para todo resultado y."""
    p = como_distribucion(p)
    if f.dim != len(p):
        raise DimensionesIncompatibles(f"La función tiene dimensión {f.dim}, la distribución {len(p)}")
    return all(f.evaluar(restar_vectores(vector_canonico(len(p), y), p.probs)) != MAS_INFINITO
               for y in range(len(p)))


@dataclass(frozen=True)
class VeredictoCertificado:
    """
    'certified' con los subgradientes testigo de cada predicción, o 'fails-at' con la primera
    predicción sin subgradiente interior-finito.
    """
    tipo: str
    testigos: Tuple[Tuple[Distribucion, LinealExtendida], ...] = ()
    p: Optional[Distribucion] = None
    subgradiente: Optional[LinealExtendida] = None

    @property
    def certificado(self) -> bool:
        return self.tipo == "certified"


def certificado_ill(g: FuncionConvexa, grilla: Iterable) -> VeredictoCertificado:
    """
    Busca en cada punto de la grilla un subgradiente interior-finito, probando el selector
    principal y luego los alternativos.

    Raises:
        PrediccionFueraDeDominio: si g(p) = +∞.
        SelectorNoDisponible: si ningún selector responde en un punto.
    """
    selectores = ([g.selector] if g.selector is not None else []) + list(g.selectores_alternativos)
    testigos = []
    for p in grilla:
        p = como_distribucion(p)
        if g.evaluar(p.probs).es_infinito:
            raise PrediccionFueraDeDominio(f"{p} está fuera del dominio de {g.nombre}")
        candidatos = []
        for selector in selectores:
            try:
                candidatos.append(selector(p.probs))
            except SelectorNoDisponible:
                continue
        if not candidatos:
            raise SelectorNoDisponible(f"Ningún selector de {g.nombre} responde en {p}")
        testigo = next((f for f in candidatos if interior_finita(f, p)), None)
        if testigo is None:
            return VeredictoCertificado("fails-at", tuple(testigos), p, candidatos[0])
        testigos.append((p, testigo))
    return VeredictoCertificado("certified", tuple(testigos))


def reconstruir_convexa(tabla: TablaPuntajes, tolerancia: Fraction = Fraction(0)) -> FuncionConvexa:
    """
    g(q) = sup_p S_p(q) con selector q ↦ S_q para q entre las predicciones.

    Raises:
        NoRegular: si la tabla tiene entradas +∞.
        NoPropia: si la tabla viola la propiedad en la grilla.
    """
    veredicto = verificar_propiedad(tabla, tolerancia)
    if not veredicto.propia:
        raise NoPropia(f"S({veredicto.p}; {veredicto.q}) = {veredicto.puntaje_pq} > "
                       f"S({veredicto.q}; {veredicto.q}) = {veredicto.puntaje_qq}")
    esperados: Dict[VectorRacional, LinealExtendida] = {
        p.probs: puntaje_esperado_extendido(tabla, p) for p in tabla.predicciones
    }
    familia = tuple(esperados.values())

    def evaluador(q: VectorRacional) -> RealExtendido:
        return supremo(s_p.evaluar(q) for s_p in familia)

    def selector(q: VectorRacional) -> LinealExtendida:
        q = como_vector(q)
        if q not in esperados:
            raise SelectorNoDisponible(f"{tuple(map(str, q))} no está entre las predicciones de la tabla")
        return esperados[q]

    return FuncionConvexa(tabla.resultados.n, evaluador, selector, "reconstruida",
                          tolerancia=tolerancia)

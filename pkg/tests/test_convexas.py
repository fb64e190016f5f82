"""Pruebas de funciones afines extendidas, subgradientes extendidos y soporte."""

from fractions import Fraction

import pytest

from src.catalogo import buscar_entrada, entropia_negativa, tamano_soporte
from src.convexas import (
    AfinExtendida,
    FuncionConvexa,
    IntervaloBinario,
    evaluar_afin,
    evaluar_supremo_familia,
    familia_supremo,
    rebasar,
    soporta,
    sondear_convexidad_estricta,
    verificar_familia_supremo,
    verificar_subgradiente,
)
from src.lineal_extendida import LinealExtendida, aleatoria, cero, lineal
from src.reales_extendidos import MAS_INFINITO, MENOS_INFINITO, RealExtendido, es_suma_legal, escalar, sumar
from src.utils.errores import (
    AnclaFueraDeDominio,
    FuncionImpropia,
    NoFinitaEnPunto,
    PrecondicionViolada,
)
from src.utils.muestreo import generador, grilla_farey, racional_aleatorio, vector_aleatorio

INFINITO_POR_Z = LinealExtendida(1, ((1,),))


def finito(valor) -> RealExtendido:
    return RealExtendido.finito(Fraction(valor))


def puntos_1d(*valores):
    return [(Fraction(x),) for x in valores]


def cuadratica() -> FuncionConvexa:
    return FuncionConvexa(1, lambda x: finito(x[0] * x[0]), lambda x: lineal((2 * x[0],)), "x²")


def valor_absoluto() -> FuncionConvexa:
    return FuncionConvexa(1, lambda x: finito(abs(x[0])),
                          lambda x: lineal((1 if x[0] > 0 else -1 if x[0] < 0 else 0,)), "|x|")


@pytest.fixture
def h_escalon():
    return AfinExtendida(INFINITO_POR_Z, (1,), 1)


@pytest.fixture
def g_escalon():
    return buscar_entrada("step").funcion


class TestAfinExtendida:

    @pytest.mark.parametrize("x, esperado", [
        (2, MAS_INFINITO),
        (1, finito(1)),
        (0, MENOS_INFINITO),
    ])
    def test_evaluar(self, h_escalon, x, esperado):
        assert evaluar_afin(h_escalon, (x,)) == esperado

    def test_rebasar_en_su_ancla(self, h_escalon):
        rebasada = rebasar(h_escalon, (1,))
        assert rebasada.ancla == (Fraction(1),)
        assert rebasada.desplazamiento == 1
        for x in puntos_1d(-2, 0, 1, Fraction(3, 2), 5):
            assert rebasada(x) == h_escalon(x)

    def test_rebasar_finita(self):
        h = AfinExtendida(lineal((2,)), (0,), 1)
        rebasada = rebasar(h, (3,))
        assert rebasada.ancla == (Fraction(3),)
        assert rebasada.desplazamiento == 7
        assert rebasada((10,)) == h((10,)) == finito(21)

    def test_rebasar_donde_no_es_finita(self, h_escalon):
        with pytest.raises(NoFinitaEnPunto):
            rebasar(h_escalon, (2,))

    def test_convexa_en_el_punto_medio(self):
        rng = generador(5)
        for _ in range(300):
            dim = int(rng.integers(1, 4))
            h = AfinExtendida(aleatoria(rng, dim), vector_aleatorio(rng, dim), racional_aleatorio(rng))
            x, x_prima = vector_aleatorio(rng, dim), vector_aleatorio(rng, dim)
            valor_x, valor_x_prima = h(x), h(x_prima)
            if not es_suma_legal(valor_x, valor_x_prima):
                continue
            medio = tuple((a + b) / 2 for a, b in zip(x, x_prima))
            assert h(medio) <= escalar(Fraction(1, 2), sumar(valor_x, valor_x_prima))


class TestFuncionConvexa:

    def test_impropia(self):
        g = FuncionConvexa(1, lambda x: MENOS_INFINITO, nombre="impropia")
        with pytest.raises(FuncionImpropia):
            g.evaluar((0,))

    def test_intervalo_binario(self):
        intervalo = IntervaloBinario(Fraction(1, 4), Fraction(3, 4), False, True)
        assert not intervalo.contiene(Fraction(1, 4))
        assert intervalo.contiene(Fraction(3, 4))
        assert str(intervalo) == "(1/4, 3/4]"


class TestVerificarSubgradiente:

    def test_soporte_vertical_del_escalon(self, g_escalon):
        grilla = [(Fraction(k, 8),) for k in range(-24, 25)]
        assert verificar_subgradiente(g_escalon, (1,), INFINITO_POR_Z, grilla)

    def test_minimo_global(self):
        assert verificar_subgradiente(cuadratica(), (0,), cero(1), puntos_1d(-3, -1, 0, 1, 2))

    def test_valor_absoluto_con_pendiente_excesiva(self):
        resultado = verificar_subgradiente(valor_absoluto(), (0,), lineal((2,)), puntos_1d(-1, 0, 1, 2))
        assert not resultado.aprobado
        assert resultado.contraejemplo == (Fraction(1),)
        assert resultado.izquierda == finito(1)
        assert resultado.derecha == finito(2)

    def test_funcion_de_la_introduccion(self, f_introduccion):
        entrada = buscar_entrada("intro-g")
        resultado = verificar_subgradiente(entrada.funcion, (1, 0, 0), f_introduccion, entrada.grilla(8))
        assert resultado.aprobado
        assert resultado.puntos_verificados == len(entrada.grilla(8))

    def test_ancla_fuera_del_dominio(self, g_escalon):
        with pytest.raises(AnclaFueraDeDominio):
            verificar_subgradiente(g_escalon, (2,), INFINITO_POR_Z, puntos_1d(0))


class TestSoporta:

    @pytest.mark.parametrize("x0", [1, 2])
    def test_soporta_desde_uno(self, h_escalon, g_escalon, x0):
        assert soporta(h_escalon, g_escalon, (x0,), puntos_1d(-2, 0, Fraction(1, 2), 1, Fraction(3, 2), 3))

    def test_no_soporta_en_cero(self, h_escalon, g_escalon):
        resultado = soporta(h_escalon, g_escalon, (0,), puntos_1d(1))
        assert not resultado.aprobado
        assert resultado.izquierda == MENOS_INFINITO
        assert resultado.derecha == finito(0)

    @pytest.mark.parametrize("nombre", ["brier", "support-size", "neg-entropy", "step", "intro-g",
                                        "squeezed:1/4,3/4,closed-closed"])
    def test_soporta_si_y_solo_si_es_subgradiente(self, nombre):
        entrada = buscar_entrada(nombre)
        g = entrada.funcion
        grilla = entrada.grilla(4)
        rechazos = 0
        for x0 in grilla:
            valor = g(x0)
            if not valor.es_finito:
                continue
            candidatos = [g.subgradiente(x0), lineal(tuple(Fraction(3 * (-1) ** k) for k in range(g.dim)))]
            for f in candidatos:
                h = AfinExtendida(f, x0, valor.valor)
                soporte = soporta(h, g, x0, grilla).aprobado
                assert soporte == verificar_subgradiente(g, x0, f, grilla).aprobado
                rechazos += not soporte
        assert rechazos > 0


class TestSupremoDeFamilias:

    def test_rectas_por_el_origen(self):
        familia = [AfinExtendida(lineal((beta,)), (0,), 0) for beta in (-1, 0, 1)]
        assert evaluar_supremo_familia(familia, (2,)) == finito(2)

    def test_familia_vacia(self):
        assert evaluar_supremo_familia([], (2,)) == MENOS_INFINITO

    def test_familia_infinita_en_el_punto(self):
        familia = [AfinExtendida(INFINITO_POR_Z, (1,), beta) for beta in (1, 2, 3)]
        assert evaluar_supremo_familia(familia, (2,)) == MAS_INFINITO

    def test_entropia_negativa_como_supremo(self):
        g = entropia_negativa().funcion
        puntos = grilla_farey(2, 4) + [(Fraction(1), Fraction(1)), (Fraction(2), Fraction(0))]
        familia = familia_supremo(g, puntos)
        assert verificar_familia_supremo(g, familia, puntos)

    def test_dominio_desconocido(self, g_escalon):
        with pytest.raises(PrecondicionViolada):
            familia_supremo(g_escalon, puntos_1d(0, 2))


class TestConvexidadEstricta:

    def test_cuadratica(self):
        veredicto = sondear_convexidad_estricta(cuadratica(), puntos_1d(-1, 0, 1, 2))
        assert veredicto.estricta
        assert veredicto.tipo == "strict-on-grid"

    def test_puntos_repetidos(self):
        assert sondear_convexidad_estricta(cuadratica(), puntos_1d(0, 1, 1, Fraction(1, 1))).estricta

    def test_valor_absoluto_comparte_soporte(self):
        veredicto = sondear_convexidad_estricta(valor_absoluto(), puntos_1d(1, 2))
        assert veredicto.tipo == "shared-support"
        assert veredicto.a == (Fraction(1),)
        assert veredicto.b == (Fraction(2),)
        assert veredicto.subgradiente == lineal((1,))

    def test_tamano_de_soporte(self):
        g = tamano_soporte().funcion
        veredicto = sondear_convexidad_estricta(g, [(Fraction(1, 3), Fraction(2, 3)),
                                                    (Fraction(1, 2), Fraction(1, 2))])
        assert not veredicto.estricta

    def test_punto_fuera_del_dominio(self, g_escalon):
        with pytest.raises(AnclaFueraDeDominio):
            sondear_convexidad_estricta(g_escalon, puntos_1d(0, 2))

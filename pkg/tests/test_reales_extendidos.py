"""Pruebas de la aritmética de reales extendidos."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from src.reales_extendidos import (
    CERO,
    MAS_INFINITO,
    MENOS_INFINITO,
    RealExtendido,
    como_real_extendido,
    es_suma_legal,
    escalar,
    formatear_decimal,
    infimo,
    parsear_real_extendido,
    signo,
    sumar,
    sumar_todos,
    supremo,
)
from src.utils.errores import SumaIlegal

racionales = st.fractions(min_value=-100, max_value=100, max_denominator=64)
finitos = racionales.map(RealExtendido.finito)
extendidos = st.one_of(st.just(MAS_INFINITO), st.just(MENOS_INFINITO), finitos)


def r(valor) -> RealExtendido:
    return RealExtendido.finito(Fraction(valor))


class TestSuma:

    def test_finito_mas_infinito(self):
        assert sumar(r(3), MAS_INFINITO) == MAS_INFINITO

    def test_infinitos_opuestos_es_ilegal(self):
        with pytest.raises(SumaIlegal) as error:
            sumar(MAS_INFINITO, MENOS_INFINITO)
        assert "[IllegalSum]" in str(error.value)

    def test_finitos(self):
        assert sumar(r(2), r(5)) == r(7)

    def test_operadores(self):
        assert r(2) + 5 == r(7)
        assert r(2) - MENOS_INFINITO == MAS_INFINITO
        assert -MAS_INFINITO == MENOS_INFINITO

    def test_sumar_todos(self):
        assert sumar_todos([r(1), r(2), MENOS_INFINITO]) == MENOS_INFINITO
        assert sumar_todos([]) == CERO
        with pytest.raises(SumaIlegal):
            sumar_todos([MAS_INFINITO, r(1), MENOS_INFINITO])

    @given(extendidos, extendidos)
    def test_conmutativa(self, a, b):
        if es_suma_legal(a, b):
            assert sumar(a, b) == sumar(b, a)

    @given(extendidos, extendidos, extendidos)
    def test_asociativa_cuando_es_legal(self, a, b, c):
        if not (es_suma_legal(a, b) and es_suma_legal(b, c)):
            return
        ab, bc = sumar(a, b), sumar(b, c)
        if es_suma_legal(ab, c) and es_suma_legal(a, bc):
            assert sumar(ab, c) == sumar(a, bc)


class TestEscalado:

    def test_negativo_invierte(self):
        assert escalar(Fraction(-2), MAS_INFINITO) == MENOS_INFINITO

    def test_cero_por_infinito(self):
        assert escalar(Fraction(0), MAS_INFINITO) == CERO
        assert 0 * MENOS_INFINITO == CERO

    def test_finito(self):
        assert escalar(Fraction(3), r(4)) == r(12)

    @given(racionales, extendidos, extendidos)
    def test_distribuye_sobre_sumas_legales(self, alfa, a, b):
        if es_suma_legal(a, b):
            assert escalar(alfa, sumar(a, b)) == sumar(escalar(alfa, a), escalar(alfa, b))

    @given(racionales, racionales, extendidos)
    def test_composicion(self, alfa, beta, a):
        assert escalar(alfa, escalar(beta, a)) == escalar(alfa * beta, a)


class TestOrdenYSigno:

    @pytest.mark.parametrize("valor, esperado", [
        (MAS_INFINITO, 1),
        (CERO, 0),
        (RealExtendido.finito(-5), -1),
        (MENOS_INFINITO, -1),
    ])
    def test_signo(self, valor, esperado):
        assert signo(valor) == esperado

    def test_supremo(self):
        assert supremo([]) == MENOS_INFINITO
        assert supremo([r(3), MAS_INFINITO, r(-1)]) == MAS_INFINITO
        assert supremo([r(1), r(2)]) == r(2)

    def test_infimo(self):
        assert infimo([]) == MAS_INFINITO
        assert infimo([r(3), MENOS_INFINITO]) == MENOS_INFINITO
        assert infimo([r(5), r(2), r(9)]) == r(2)

    @given(extendidos)
    def test_orden_total_acotado(self, a):
        assert MENOS_INFINITO <= a <= MAS_INFINITO

    @given(extendidos, extendidos)
    def test_tricotomia(self, a, b):
        assert sum([a < b, a == b, a > b]) == 1


class TestTexto:

    @pytest.mark.parametrize("texto, esperado", [
        ("inf", MAS_INFINITO),
        ("-inf", MENOS_INFINITO),
        ("3/6", RealExtendido.finito(Fraction(1, 2))),
        ("-7", RealExtendido.finito(-7)),
    ])
    def test_parsear(self, texto, esperado):
        assert parsear_real_extendido(texto) == esperado

    def test_forma_textual(self):
        assert str(RealExtendido.finito(Fraction(-2, 4))) == "-1/2"
        assert str(MAS_INFINITO) == "inf"
        assert str(MENOS_INFINITO) == "-inf"

    def test_rechaza_flotantes(self):
        with pytest.raises(TypeError):
            como_real_extendido(0.5)
        with pytest.raises(ValueError):
            parsear_real_extendido("uno")

    def test_decimal(self):
        assert formatear_decimal(RealExtendido.finito(Fraction(1, 2)), 10) == "0.5"
        assert formatear_decimal(MENOS_INFINITO, 10) == "-inf"
        assert formatear_decimal(CERO, 10) == "0"
        assert formatear_decimal(RealExtendido.finito(Fraction(1, 3)), 5) == "0.33333"

"""Pruebas de las funciones lineales extendidas."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.geometria import Politopo, como_vector, producto_punto, proyectar_en_complemento, sumar_vectores
from src.lineal_extendida import (
    Clase,
    LinealExtendida,
    agregar_al_frente,
    aleatoria,
    cero,
    clasificar,
    evaluar,
    iguales,
    indicadora_negativa,
    lineal,
    profundidad,
    verificar_axiomas,
)
from src.reales_extendidos import MAS_INFINITO, MENOS_INFINITO, RealExtendido, es_suma_legal, escalar, sumar
from src.utils.equivalencia import equivalencia_lineal_extendida, primera_diferencia, punto_distintivo
from src.utils.errores import (
    ColaNoOrtogonal,
    ContieneOrigen,
    DemasiadoProfunda,
    DimensionesIncompatibles,
    DireccionNula,
    NoOrtogonales,
)
from src.utils.muestreo import combinacion_convexa_aleatoria, generador, vector_aleatorio


def v(*coordenadas):
    return como_vector(coordenadas)


class TestConstruccion:

    def test_funcion_de_la_introduccion(self, f_introduccion):
        assert f_introduccion.direcciones == (v(0, 0, 1), v(0, 1, 0))
        assert f_introduccion.cola == v(1, 0, 0)

    def test_lineal_finita(self):
        f = LinealExtendida(2, (), (1, 1))
        assert profundidad(f) == 0
        assert evaluar(f, (2, 3)) == RealExtendido.finito(5)

    def test_direcciones_no_ortogonales(self):
        with pytest.raises(NoOrtogonales):
            LinealExtendida(2, ((1, 0), (2, 0)), (0, 0))

    def test_cola_no_ortogonal(self):
        with pytest.raises(ColaNoOrtogonal):
            LinealExtendida(2, ((1, 0),), (1, 1))

    def test_direccion_nula(self):
        with pytest.raises(DireccionNula):
            LinealExtendida(2, ((0, 0),))

    def test_demasiado_profunda(self):
        with pytest.raises(DemasiadoProfunda):
            LinealExtendida(1, ((1,), (-1,)))

    def test_dimension_de_la_cola(self):
        with pytest.raises(DimensionesIncompatibles):
            LinealExtendida(2, (), (1, 2, 3))

    def test_canonicaliza_direcciones(self, f_introduccion):
        escalada = LinealExtendida(3, ((0, 0, 5), (0, 3, 0)), (1, 0, 0))
        assert iguales(f_introduccion, escalada)
        assert escalada == f_introduccion


class TestEvaluacion:

    @pytest.mark.parametrize("punto, esperado", [
        ((1, 2, 3), MAS_INFINITO),
        ((4, -1, 0), MENOS_INFINITO),
        ((7, 0, 0), RealExtendido.finito(7)),
    ])
    def test_introduccion(self, f_introduccion, punto, esperado):
        assert evaluar(f_introduccion, punto) == esperado

    @pytest.mark.parametrize("punto, clase", [
        ((0, 5, 0), Clase.MAS),
        ((0, 0, -1), Clase.MENOS),
        ((9, 0, 0), Clase.FINITO),
    ])
    def test_clasificar(self, f_introduccion, punto, clase):
        assert clasificar(f_introduccion, punto) is clase

    def test_dimension_del_punto(self, f_introduccion):
        with pytest.raises(DimensionesIncompatibles):
            evaluar(f_introduccion, (1, 2))

    def test_profundidades(self, f_introduccion):
        assert profundidad(f_introduccion) == 2
        assert profundidad(lineal((1, 1))) == 0
        assert profundidad(LinealExtendida(1, ((1,),), (0,))) == 1

    def test_infinito_por_z(self):
        f = LinealExtendida(1, ((1,),), (0,))
        assert f((Fraction(1, 100),)) == MAS_INFINITO
        assert f((0,)) == RealExtendido.finito(0)
        assert f((-3,)) == MENOS_INFINITO


class TestIgualdad:

    def test_direcciones_opuestas(self):
        f1 = LinealExtendida(3, ((0, 0, 1),))
        f2 = LinealExtendida(3, ((0, 0, -1),))
        assert not iguales(f1, f2)
        x = punto_distintivo(f1, f2)
        assert f1(x) != f2(x)

    def test_colas_distintas(self):
        assert not iguales(lineal((1, 0)), lineal((0, 1)))

    def test_dimensiones_distintas(self):
        with pytest.raises(DimensionesIncompatibles):
            iguales(cero(2), cero(3))

    @settings(max_examples=60)
    @given(st.integers(0, 2 ** 32 - 1), st.integers(1, 4))
    def test_parametros_distintos_implican_funciones_distintas(self, semilla, dim):
        rng = generador(semilla)
        f1, f2 = aleatoria(rng, dim), aleatoria(rng, dim)
        if iguales(f1, f2):
            assert punto_distintivo(f1, f2) is None
            return
        x = punto_distintivo(f1, f2)
        assert f1(x) != f2(x)
        assert not equivalencia_lineal_extendida(f1, f2)

    @pytest.mark.lento
    def test_mil_pares_distintos(self):
        rng = generador(1000)
        pares = 0
        while pares < 1000:
            dim = int(rng.integers(1, 6))
            f1 = aleatoria(rng, dim)
            modo = int(rng.integers(0, 4))
            if modo == 0:
                f2 = aleatoria(rng, dim)
            elif modo == 1:
                # mismas direcciones, otra cola
                cola = proyectar_en_complemento(vector_aleatorio(rng, dim), f1.direcciones)
                f2 = LinealExtendida(dim, f1.direcciones, cola)
            elif modo == 2:
                # prefijo propio de las direcciones
                corte = int(rng.integers(0, f1.profundidad + 1))
                f2 = LinealExtendida(dim, f1.direcciones[:corte], f1.cola)
            else:
                if not f1.direcciones:
                    continue
                primera = tuple(-c for c in f1.direcciones[0])
                f2 = LinealExtendida(dim, (primera,) + f1.direcciones[1:], f1.cola)
            if iguales(f1, f2):
                continue
            x = punto_distintivo(f1, f2)
            assert f1(x) != f2(x), f"{f1} y {f2} coinciden en {x}"
            pares += 1

    def test_primera_diferencia(self):
        f1 = LinealExtendida(1, ((1,),))
        f2 = lineal((5,))
        assert primera_diferencia(f1, f2, [(0,), (2,)]) == (Fraction(2),)
        assert primera_diferencia(f1, f1, [(0,), (2,)]) is None


class TestAgregarAlFrente:

    def test_reconstruye_la_introduccion(self, f_introduccion):
        f2 = LinealExtendida(3, ((0, 1, 0),), (1, 0, 0))
        assert iguales(agregar_al_frente((0, 0, 1), f2), f_introduccion)

    def test_sobre_la_funcion_nula(self):
        f = agregar_al_frente((1, 0), cero(2))
        assert f((3, 7)) == MAS_INFINITO
        assert f((-1, 7)) == MENOS_INFINITO
        assert f((0, 7)) == RealExtendido.finito(0)

    def test_cola_no_ortogonal(self):
        with pytest.raises(NoOrtogonales):
            agregar_al_frente((1, 0), lineal((1, 0)))

    def test_direccion_nula(self):
        with pytest.raises(DireccionNula):
            agregar_al_frente((0, 0), cero(2))


class TestDescomposicion:

    @settings(max_examples=50)
    @given(st.integers(0, 2 ** 32 - 1), st.integers(1, 4))
    def test_conos_y_subespacio(self, semilla, dim):
        rng = generador(semilla)
        f = aleatoria(rng, dim)
        x, y = vector_aleatorio(rng, dim), vector_aleatorio(rng, dim)
        cx, cy = f.clasificar(x), f.clasificar(y)
        alfa = Fraction(int(rng.integers(1, 9)), int(rng.integers(1, 9)))

        # S⁺ y S⁻ son conos convexos; la parte finita es un subespacio
        assert f.clasificar(tuple(alfa * c for c in x)) is cx
        if cx is cy and cx is not Clase.FINITO:
            assert f.clasificar(sumar_vectores(x, y)) is cx
        if cx is Clase.FINITO:
            assert f.clasificar(tuple(-c for c in x)) is Clase.FINITO
            if cy is Clase.FINITO:
                assert f.clasificar(sumar_vectores(x, y)) is Clase.FINITO
        if cx is Clase.MAS:
            assert f.clasificar(tuple(-c for c in x)) is Clase.MENOS


class TestAxiomas:

    def test_introduccion(self, f_introduccion):
        reporte = verificar_axiomas(f_introduccion, cantidad=1000)
        assert reporte.aprobado
        assert reporte.muestras_verificadas == 1000
        assert reporte.contraejemplo is None

    def test_funcion_nula(self):
        assert verificar_axiomas(cero(3)).aprobado

    def test_impostora_falla_en_el_escalado(self):
        def impostora(x):
            if x[0] == 1:
                return MAS_INFINITO
            return RealExtendido.finito(x[0])

        reporte = verificar_axiomas(impostora, dim=1)
        assert not reporte.aprobado
        contraejemplo = reporte.contraejemplo
        assert contraejemplo.axioma == 'escalado'
        assert contraejemplo.x == (Fraction(1),)
        assert contraejemplo.alfa == 2
        assert contraejemplo.obtenido == RealExtendido.finito(2)

    def test_evaluador_sin_dimension(self):
        with pytest.raises(ValueError):
            verificar_axiomas(lambda x: RealExtendido.finito(0))

    @settings(max_examples=25)
    @given(st.integers(0, 2 ** 32 - 1), st.integers(1, 4))
    def test_funciones_aleatorias(self, semilla, dim):
        f = aleatoria(generador(semilla), dim)
        assert verificar_axiomas(f, semilla=semilla, cantidad=150).aprobado

    @pytest.mark.lento
    def test_diez_mil_funciones_aleatorias(self):
        rng = generador(10_000)
        for i in range(10_000):
            f = aleatoria(rng, int(rng.integers(1, 6)))
            reporte = verificar_axiomas(f, semilla=i, cantidad=10)
            assert reporte.aprobado, f"instancia {i}: {f} {reporte.contraejemplo}"

    def test_impostora_falla_en_el_punto_medio(self):
        def impostora(x):
            if x == (Fraction(2),):
                return MAS_INFINITO
            return RealExtendido.finito(x[0])

        reporte = verificar_axiomas(impostora, muestras=[((1,), (3,), 1)], dim=1)
        assert not reporte.aprobado
        assert reporte.contraejemplo.axioma == 'convexidad'
        assert reporte.contraejemplo.esperado == RealExtendido.finito(2)
        assert reporte.contraejemplo.obtenido == MAS_INFINITO

    @settings(max_examples=60)
    @given(st.integers(0, 2 ** 32 - 1), st.integers(1, 4), st.integers(1, 7))
    def test_epigrafo_convexo(self, semilla, dim, numerador):
        rng = generador(semilla)
        f = aleatoria(rng, dim)
        x, x_prima = vector_aleatorio(rng, dim), vector_aleatorio(rng, dim)
        lam = Fraction(numerador, 8)
        valor_x, valor_x_prima = f(x), f(x_prima)
        if not es_suma_legal(valor_x, valor_x_prima):
            return
        combinacion = sumar_vectores(tuple(lam * c for c in x), tuple((1 - lam) * c for c in x_prima))
        assert f(combinacion) <= sumar(escalar(lam, valor_x), escalar(1 - lam, valor_x_prima))

    @settings(max_examples=40)
    @given(st.integers(0, 2 ** 32 - 1), st.integers(1, 4))
    def test_homogeneidad_positiva_directa(self, semilla, dim):
        rng = generador(semilla)
        f = aleatoria(rng, dim)
        x = vector_aleatorio(rng, dim)
        alfa = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 6)))
        assert f(tuple(alfa * c for c in x)) == escalar(alfa, f(x))


class TestIndicadoraNegativa:

    def _verificar(self, vertices, semilla=0, combinaciones=20):
        politopo = Politopo(tuple(vertices))
        f = indicadora_negativa(politopo)
        for z in politopo.vertices:
            assert f(z) == MENOS_INFINITO
        rng = generador(semilla)
        for _ in range(combinaciones):
            assert f(combinacion_convexa_aleatoria(rng, politopo.vertices)) == MENOS_INFINITO
        return f

    def test_dos_vertices(self):
        f = self._verificar([v(1, 0), v(1, 1)])
        assert f((1, Fraction(1, 2))) == MENOS_INFINITO

    def test_un_vertice(self):
        self._verificar([v(0, 1)])

    def test_profundidad_acotada(self):
        f = self._verificar([v(1, 0, 0), v(0, 1, 0), v(0, 0, 1)])
        assert f.profundidad <= 3
        assert f.cola == v(0, 0, 0)

    def test_origen_entre_dos_vertices(self):
        with pytest.raises(ContieneOrigen):
            indicadora_negativa(Politopo((v(1, 0), v(-1, 0))))

    def test_origen_como_vertice(self):
        with pytest.raises(ContieneOrigen):
            indicadora_negativa(Politopo((v(0, 0), v(1, 1))))

    @pytest.mark.parametrize("vertices", [
        [v(3, Fraction(8, 3))],
        [v(Fraction(1, 2), 0, Fraction(2, 3))],
        [v(-4, 4, Fraction(-10, 3)), v(3, -1, Fraction(11, 3))],
        [v(-2), v(-1)],
    ])
    def test_politopos_que_no_contienen_al_origen(self, vertices):
        f = self._verificar(vertices)
        assert verificar_axiomas(f, cantidad=200).aprobado

    @pytest.mark.lento
    def test_quinientos_politopos_aleatorios(self, origen_en_envolvente):
        rng = generador(20240517)
        construidos = 0
        while construidos < 500:
            dim = int(rng.integers(1, 5))
            vertices = tuple(vector_aleatorio(rng, dim, 8) for _ in range(int(rng.integers(1, 7))))
            if origen_en_envolvente(vertices):
                with pytest.raises(ContieneOrigen):
                    indicadora_negativa(Politopo(vertices))
                continue
            f = self._verificar(vertices, construidos, combinaciones=200)
            reporte = verificar_axiomas(f, semilla=construidos, cantidad=50)
            assert reporte.aprobado, f"politopo {construidos}: {reporte.contraejemplo}"
            construidos += 1

    def test_direcciones_ortogonales(self):
        f = indicadora_negativa(Politopo((v(1, 0, 0), v(1, 1, 0), v(1, 0, 1))))
        for i in range(f.profundidad):
            for j in range(i + 1, f.profundidad):
                assert producto_punto(f.direcciones[i], f.direcciones[j]) == 0

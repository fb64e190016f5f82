"""Pruebas del diagrama de pruebas de signo (no requieren el ejecutable de Graphviz)."""

import pytest

graphviz = pytest.importorskip("graphviz")

from src.graficador import GraficadorLinealExtendida, verificar_instalacion  # noqa: E402
from src.lineal_extendida import LinealExtendida, lineal  # noqa: E402


class TestGraficador:

    def test_cadena_de_la_introduccion(self, f_introduccion):
        dot = GraficadorLinealExtendida().construir_diagrama(f_introduccion, "intro")
        fuente = dot.source
        assert "v0 -> v1" in fuente
        assert "v1 -> cola" in fuente
        assert fuente.count("-> mas_infinito") == 2
        assert fuente.count("-> menos_infinito") == 2
        assert "(0, 0, 1)" in fuente

    def test_funcion_finita_sin_pruebas(self):
        dot = GraficadorLinealExtendida().construir_diagrama(lineal((1, 2)), "finita", incluir_titulo=False)
        assert "diamond" not in dot.source
        assert "(1, 2)" in dot.source

    def test_configurar_estilo(self):
        graficador = GraficadorLinealExtendida()
        graficador.configurar_estilo(formato='svg', dpi='72')
        dot = graficador.construir_diagrama(LinealExtendida(1, ((1,),)), "escalon")
        assert dot.format == 'svg'
        assert 'dpi=72' in dot.source

    def test_verificar_instalacion(self):
        info = verificar_instalacion()
        assert info['libreria_instalada'] is True
        assert isinstance(info['mensaje'], str)

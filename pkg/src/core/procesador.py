"""
Procesador central del analizador de funciones lineales extendidas y reglas de puntaje.

Este módulo orquesta la carga de funciones y tablas, la construcción de reglas desde el catálogo,
las verificaciones (axiomas, propiedad, certificado interior-finito, convexidad estricta) y la
escritura de resultados. Cada operación devuelve un veredicto con esquema estable.
"""

import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from src.catalogo import EntradaCatalogo, buscar_entrada, tolerancia_para
from src.convexas import AfinExtendida, sondear_convexidad_estricta
from src.core.configuracion import ConfiguracionEjecucion
from src.lineal_extendida import LinealExtendida, verificar_axiomas
from src.manejador_archivos import ManejadorArchivos
from src.puntajes import (
    ConjuntoResultados,
    TablaPuntajes,
    certificado_ill,
    reconstruir_convexa,
    regla_subtangente,
    verificar_propiedad,
)
from src.reales_extendidos import RealExtendido, formatear_decimal
from src.utils.errores import ErrorEntrada, NoBinario
from src.utils.logger import Logger, Iconos

VEREDICTOS_FALLIDOS = ('fail', 'not-regular', 'violation', 'fails-at')


class ProcesadorAnalisis:
    """
    Procesador principal: evaluación, axiomas, reglas de puntaje y datos de gráfico.
    """

    def __init__(self, logger: Logger):
        """
        Args:
            logger (Logger): Instancia de logger para mensajes.
        """
        self.logger = logger
        self.manejador_archivos = ManejadorArchivos()

    # ------------------------------------------------------------------
    # Funciones lineales extendidas
    # ------------------------------------------------------------------

    def evaluar(self, ruta: str, punto: str) -> Dict[str, Any]:
        """
        Evalúa una función lineal (o afín) extendida en un punto.

        Returns:
            dict con 'valor' y, para funciones lineales extendidas, 'clase'.
        """
        self.logger.info(f"Cargando función desde: {ruta}", Iconos.CARGANDO)
        funcion = self.manejador_archivos.cargar_funcion(ruta)
        x = self.manejador_archivos.parsear_punto(punto)
        self.logger.debug(f"Función: {funcion}", Iconos.FUNCION)

        valor = funcion.evaluar(x)
        resultado = {'valor': str(valor)}
        if isinstance(funcion, LinealExtendida):
            resultado['clase'] = funcion.clasificar(x).value
        self.logger.info(f"f({punto}) = {valor}", Iconos.EVALUACION)
        return resultado

    def axiomas(self, config: ConfiguracionEjecucion) -> Dict[str, Any]:
        """Verifica homogeneidad, aditividad legal y convexidad en el punto medio sobre muestras sembradas."""
        ruta = self._ruta(config)
        self.logger.info(self.logger.separador)
        self.logger.info("VERIFICACIÓN DE AXIOMAS", Iconos.AXIOMAS)
        self.logger.info(f"Cargando función desde: {ruta}", Iconos.CARGANDO)
        funcion = self.manejador_archivos.cargar_funcion(ruta)
        if isinstance(funcion, AfinExtendida):
            raise ErrorEntrada("Los axiomas se verifican sobre funciones lineales extendidas, no afines")

        reporte = verificar_axiomas(funcion, semilla=config.semilla, cantidad=config.ensayos)
        veredicto = {
            'comando': 'axiomas',
            'veredicto': 'pass' if reporte.aprobado else 'fail',
            'grilla': f"aleatoria:{config.ensayos}:{config.semilla}",
            'muestras_verificadas': reporte.muestras_verificadas,
            'sumas_ilegales_omitidas': reporte.sumas_ilegales_omitidas,
        }
        if reporte.contraejemplo is not None:
            veredicto['contraejemplo'] = reporte.contraejemplo.a_diccionario()
            self.logger.error(f"Falla el axioma de {reporte.contraejemplo.axioma}")
        else:
            self.logger.success(f"{reporte.muestras_verificadas} muestras verificadas "
                                f"({reporte.sumas_ilegales_omitidas} sumas ilegales omitidas)")
        self._guardar_veredicto(veredicto, config)
        return veredicto

    # ------------------------------------------------------------------
    # Reglas de puntaje
    # ------------------------------------------------------------------

    def construir(self, config: ConfiguracionEjecucion) -> Dict[str, Any]:
        """Construye la regla subtangente de una entrada del catálogo y reporta su regularidad."""
        entrada = self._buscar_entrada(config)
        tabla, grilla = self._construir_tabla(entrada, config)
        self._guardar_tabla(tabla, config)

        infinitas = tabla.entradas_infinitas()
        veredicto = {
            'comando': 'puntaje construir',
            'veredicto': 'regular' if not infinitas else 'not-regular',
            'grilla': grilla,
            'funcion': entrada.nombre,
            'predicciones': len(tabla.predicciones),
            'entradas_infinitas': [[self.manejador_archivos.vector_a_lista(p.probs), etiqueta]
                                   for p, etiqueta in infinitas],
        }
        self._guardar_veredicto(veredicto, config)
        return veredicto

    def verificar(self, config: ConfiguracionEjecucion) -> Dict[str, Any]:
        """Verifica la propiedad de una tabla (archivo o entrada del catálogo) en su grilla."""
        tabla, grilla = self._cargar_tabla_o_construir(config)
        self.logger.info(f"Comparando {len(tabla.predicciones) ** 2} pares de predicciones", Iconos.PROCESANDO)
        resultado = verificar_propiedad(tabla, tolerancia_para(config.precision))

        veredicto = {'comando': 'puntaje verificar', 'veredicto': resultado.tipo, 'grilla': grilla}
        if not resultado.propia:
            veredicto.update({
                'p': self.manejador_archivos.vector_a_lista(resultado.p.probs),
                'q': self.manejador_archivos.vector_a_lista(resultado.q.probs),
                'puntaje_pq': str(resultado.puntaje_pq),
                'puntaje_qq': str(resultado.puntaje_qq),
            })
            self.logger.error(f"S({resultado.p}; {resultado.q}) = {resultado.puntaje_pq} > "
                              f"S({resultado.q}; {resultado.q}) = {resultado.puntaje_qq}")
        else:
            self.logger.success(f"Veredicto: {resultado.tipo}", Iconos.VEREDICTO)
        self._guardar_veredicto(veredicto, config)
        return veredicto

    def reconstruir(self, config: ConfiguracionEjecucion) -> Dict[str, Any]:
        """
        Reconstruye g(q) = sup_p S_p(q) a partir de una tabla propia y sondea su convexidad estricta.
        """
        tabla, grilla = self._cargar_tabla_o_construir(config)
        self.logger.info("Reconstruyendo la función convexa asociada", Iconos.RECONSTRUCCION)
        g = reconstruir_convexa(tabla, tolerancia_para(config.precision))
        puntos = [p.probs for p in tabla.predicciones]
        sonda = sondear_convexidad_estricta(g, puntos)

        detalle = [{
            'q': self.manejador_archivos.vector_a_lista(q),
            'g': str(g.evaluar(q)),
            'selector': self.manejador_archivos.lineal_extendida_a_diccionario(g.subgradiente(q)),
        } for q in puntos]
        veredicto = {'comando': 'puntaje reconstruir', 'veredicto': sonda.tipo, 'grilla': grilla}
        if not sonda.estricta:
            veredicto.update({
                'a': self.manejador_archivos.vector_a_lista(sonda.a),
                'b': self.manejador_archivos.vector_a_lista(sonda.b),
            })

        directorio = Path(config.directorio_salida)
        if config.formato == 'csv':
            encabezado = [f"q({etiqueta})" for etiqueta in tabla.resultados] + ['g']
            filas = [[formatear_decimal(RealExtendido.finito(c), config.precision) for c in q]
                     + [formatear_decimal(g.evaluar(q), config.precision)] for q in puntos]
            ruta = self.manejador_archivos.guardar_csv(encabezado, filas, directorio / "reconstruccion.csv")
        else:
            ruta = self.manejador_archivos.guardar_json(dict(veredicto, puntos=detalle),
                                                        directorio / "reconstruccion.json")
        self.logger.info(f"Reconstrucción guardada: {ruta}", Iconos.GUARDANDO)
        self.logger.info(f"Sonda de convexidad estricta: {sonda.tipo}", Iconos.CONVEXA)
        self._guardar_veredicto(veredicto, config)
        return veredicto

    def certificar(self, config: ConfiguracionEjecucion) -> Dict[str, Any]:
        """Busca un subgradiente interior-finito en cada punto de la grilla."""
        objetivo = self._ruta(config)
        if Path(objetivo).is_file():
            tabla = self.manejador_archivos.cargar_tabla(objetivo)
            g = reconstruir_convexa(tabla, tolerancia_para(config.precision))
            puntos = [p.probs for p in tabla.predicciones]
            grilla = objetivo
        else:
            entrada = self._buscar_entrada(config)
            g = entrada.funcion
            puntos = entrada.grilla(config.denominador_grilla)
            grilla = config.nombre_grilla(entrada.resultados.n)

        self.logger.info(f"Certificando {len(puntos)} puntos de {g.nombre}", Iconos.CERTIFICADO)
        resultado = certificado_ill(g, puntos)
        veredicto = {
            'comando': 'puntaje certificar-ill',
            'veredicto': resultado.tipo,
            'grilla': grilla,
            'testigos': [{
                'p': self.manejador_archivos.vector_a_lista(p.probs),
                'subgradiente': self.manejador_archivos.lineal_extendida_a_diccionario(f),
            } for p, f in resultado.testigos],
        }
        if not resultado.certificado:
            veredicto['p'] = self.manejador_archivos.vector_a_lista(resultado.p.probs)
            veredicto['subgradiente'] = self.manejador_archivos.lineal_extendida_a_diccionario(resultado.subgradiente)
            self.logger.warning(f"Sin subgradiente interior-finito en p = {resultado.p}")
        else:
            self.logger.success(f"Certificado en {len(resultado.testigos)} puntos", Iconos.CERTIFICADO)
        self._guardar_veredicto(veredicto, config)
        return veredicto

    def datos_grafico(self, config: ConfiguracionEjecucion) -> str:
        """
        Muestrea g en p(1) = k/(N-1), k = 0..N-1, para una entrada binaria y escribe el CSV.

        Returns:
            str: Ruta del CSV generado.
        """
        entrada = self._buscar_entrada(config)
        if not entrada.es_binaria:
            raise NoBinario(f"{entrada.nombre} no está definida sobre dos resultados")
        n = config.puntos - 1
        filas = []
        for k in range(config.puntos):
            s = Fraction(k, n)
            valor = entrada.funcion.evaluar((1 - s, s))
            filas.append([formatear_decimal(RealExtendido.finito(s), config.precision),
                          formatear_decimal(valor, config.precision)])
        nombre = re.sub(r'[^A-Za-z0-9_-]+', '_', entrada.nombre).strip('_')
        ruta = self.manejador_archivos.guardar_csv(['p1', 'g'], filas,
                                                   Path(config.directorio_salida) / f"datos_{nombre}.csv")
        self.logger.success(f"Datos de gráfico guardados: {ruta}", Iconos.GRAFICO)
        return ruta

    def diagrama(self, ruta: str, directorio_salida: str, formato: str = 'png') -> str:
        """Dibuja la cadena de pruebas de signo de una función lineal extendida."""
        from src.graficador import GraficadorLinealExtendida

        funcion = self.manejador_archivos.cargar_funcion(ruta)
        if isinstance(funcion, AfinExtendida):
            funcion = funcion.f
        graficador = GraficadorLinealExtendida()
        graficador.configurar_estilo(formato=formato)
        archivo = graficador.generar_diagrama(funcion, Path(ruta).stem, directorio_salida)
        self.logger.success(f"Diagrama generado: {archivo}", Iconos.GRAFICO)
        return archivo

    # ------------------------------------------------------------------
    # Auxiliares
    # ------------------------------------------------------------------

    @staticmethod
    def codigo_salida(veredicto: Dict[str, Any], esperado: Optional[str] = None) -> int:
        """0 si el veredicto coincide con el esperado (o no es una falla, si no se pidió ninguno); 1 si no."""
        if esperado:
            return 0 if veredicto['veredicto'] == esperado else 1
        return 1 if veredicto['veredicto'] in VEREDICTOS_FALLIDOS else 0

    @staticmethod
    def _ruta(config: ConfiguracionEjecucion) -> str:
        if not config.rutas:
            raise ErrorEntrada(f"El comando '{config.comando}' necesita un archivo o una entrada del catálogo")
        return config.rutas[0]

    def _buscar_entrada(self, config: ConfiguracionEjecucion) -> EntradaCatalogo:
        nombre = self._ruta(config)
        resultados = ConjuntoResultados(config.resultados) if config.resultados else None
        entrada = buscar_entrada(nombre, resultados, config.precision)
        if entrada.resultados is None:
            raise ErrorEntrada(f"{entrada.nombre} no está definida sobre distribuciones de resultados")
        self.logger.info(f"Entrada del catálogo: {entrada.nombre}", Iconos.CONVEXA)
        self.logger.debug(entrada.notas)
        return entrada

    def _construir_tabla(self, entrada: EntradaCatalogo,
                         config: ConfiguracionEjecucion) -> Tuple[TablaPuntajes, str]:
        grilla = entrada.grilla(config.denominador_grilla)
        nombre_grilla = config.nombre_grilla(entrada.resultados.n)
        self.logger.info(f"Grilla {nombre_grilla}: {len(grilla)} predicciones", Iconos.GRILLA)
        tabla = regla_subtangente(entrada.funcion, grilla, entrada.resultados)
        self.logger.info(f"Tabla construida ({len(tabla.predicciones)} × {tabla.resultados.n})", Iconos.TABLA)
        return tabla, nombre_grilla

    def _cargar_tabla_o_construir(self, config: ConfiguracionEjecucion) -> Tuple[TablaPuntajes, str]:
        objetivo = self._ruta(config)
        if Path(objetivo).is_file():
            self.logger.info(f"Cargando tabla desde: {objetivo}", Iconos.CARGANDO)
            return self.manejador_archivos.cargar_tabla(objetivo), objetivo
        return self._construir_tabla(self._buscar_entrada(config), config)

    def _guardar_tabla(self, tabla: TablaPuntajes, config: ConfiguracionEjecucion) -> str:
        directorio = Path(config.directorio_salida)
        if config.formato == 'csv':
            ruta = self.manejador_archivos.guardar_tabla_csv(tabla, directorio / "tabla.csv", config.precision)
        else:
            ruta = self.manejador_archivos.guardar_json(self.manejador_archivos.tabla_a_diccionario(tabla),
                                                        directorio / "tabla.json")
        self.logger.info(f"Tabla guardada: {ruta}", Iconos.GUARDANDO)
        return ruta

    def _guardar_veredicto(self, veredicto: Dict[str, Any], config: ConfiguracionEjecucion) -> str:
        ruta = self.manejador_archivos.guardar_json(veredicto, Path(config.directorio_salida) / "veredicto.json")
        self.logger.debug(f"Veredicto guardado: {ruta}", Iconos.ARCHIVO)
        return ruta

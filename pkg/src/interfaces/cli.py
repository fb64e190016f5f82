"""
Interfaz de línea de comandos del analizador.

Permite evaluar funciones lineales extendidas, verificar sus axiomas, construir y verificar reglas de
puntaje, emitir certificados interior-finitos, reconstruir la función convexa de una tabla y generar
datos de gráfico y diagramas desde la terminal.
"""

import argparse

from src.catalogo import nombres_disponibles
from src.core.configuracion import VALORES_POR_DEFECTO, FORMATOS_VALIDOS, ConfiguracionEjecucion
from src.graficador import FORMATOS_IMAGEN, verificar_instalacion

CODIGO_ERROR_ENTRADA = 2

ACCIONES_PUNTAJE = {
    'construir': 'construir', 'build': 'construir',
    'verificar': 'verificar', 'verify': 'verificar',
    'reconstruir': 'reconstruir', 'reconstruct': 'reconstruir',
    'certificar-ill': 'certificar', 'ill-cert': 'certificar',
}


class InterfazLineaComandos:
    """
    Maneja la interfaz de línea de comandos y argumentos del analizador.
    """

    def __init__(self):
        """Inicializa el parser de argumentos."""
        self.parser = self._crear_parser()

    def parse_args(self, args=None):
        """Parsea los argumentos de línea de comandos."""
        return self.parser.parse_args(args)

    def _crear_parser(self):
        """
        Crea el parser con subcomandos, opciones comunes y ejemplos de uso.
        """
        parser = argparse.ArgumentParser(
            description="Analizador de funciones lineales extendidas, subgradientes extendidos y reglas de puntaje propias",
            formatter_class=argparse.RawDescriptionHelpFormatter,
            epilog=f"""
Ejemplos de uso:
  python main.py evaluar ejemplos/intro-f.json "1,2,3"             # inf
  python main.py axiomas ejemplos/intro-f.json --ensayos 10000     # Verificar axiomas
  python main.py puntaje construir neg-entropy --denominador-grilla 8
  python main.py puntaje verificar resultados/tabla.json --esperado strictly-proper-on-grid
  python main.py puntaje certificar-ill squeezed:1/4,3/4,closed-closed
  python main.py puntaje reconstruir support-size --resultados a,b,c
  python main.py datos-grafico neg-entropy --puntos 101 --formato csv
  python main.py diagrama ejemplos/intro-f.json -f svg

Entradas del catálogo:
  {', '.join(nombres_disponibles())}

Códigos de salida:
  0  veredicto aprobado (o igual al pedido con --esperado)
  1  falla de una propiedad (axioma, propiedad, certificado)
  2  error de entrada (archivo, campo, dimensiones, precondiciones)

Los diagramas requieren tener Graphviz instalado:
  pip install graphviz
  Descargar software desde: https://graphviz.org/download/
            """)

        parser.add_argument('--verificar-graphviz', action='store_true',
                            help='Verificar la instalación de Graphviz y salir')
        parser.add_argument('--verbose', action='store_true',
                            help='Mostrar información detallada del proceso')
        parser.add_argument('--version', action='version', version='Analizador de Funciones Lineales Extendidas 1.0')

        subparsers = parser.add_subparsers(dest='comando', metavar='COMANDO')

        evaluar = subparsers.add_parser('evaluar', aliases=['eval'],
                                        help='Evaluar una función lineal o afín extendida en un punto')
        evaluar.add_argument('archivo', help='JSON de la función ({"dim","dirs","tail"} o {"f","anchor","offset"})')
        evaluar.add_argument('punto', help='Punto como lista separada por comas, por ejemplo "1,2,3" o "1/2,-1"')

        axiomas = subparsers.add_parser('axiomas', aliases=['axioms'],
                                        help='Verificar homogeneidad y aditividad legal con muestras sembradas')
        axiomas.add_argument('archivo', help='JSON de la función lineal extendida')
        axiomas.add_argument('--ensayos', '--trials', type=int, default=VALORES_POR_DEFECTO['ensayos'],
                             help=f"Cantidad de muestras (por defecto: {VALORES_POR_DEFECTO['ensayos']})")
        self._agregar_opciones_comunes(axiomas)

        puntaje = subparsers.add_parser('puntaje', aliases=['score'],
                                        help='Construir, verificar, reconstruir o certificar reglas de puntaje')
        puntaje.add_argument('accion', choices=sorted(ACCIONES_PUNTAJE),
                             help='construir|verificar|reconstruir|certificar-ill (o build|verify|reconstruct|ill-cert)')
        puntaje.add_argument('objetivo', help='Entrada del catálogo o ruta a una tabla JSON')
        puntaje.add_argument('--resultados', '--outcomes', metavar='ETIQUETAS',
                             help='Etiquetas de resultados separadas por comas (por defecto: a,b)')
        self._agregar_opciones_comunes(puntaje)

        datos = subparsers.add_parser('datos-grafico', aliases=['plotdata'],
                                      help='CSV de (p(1), g) para una entrada binaria del catálogo')
        datos.add_argument('objetivo', help='Entrada binaria del catálogo')
        datos.add_argument('--puntos', '--points', type=int, default=VALORES_POR_DEFECTO['puntos'],
                           help=f"Cantidad de puntos (por defecto: {VALORES_POR_DEFECTO['puntos']})")
        datos.add_argument('--resultados', '--outcomes', metavar='ETIQUETAS',
                           help='Etiquetas de los dos resultados separadas por comas')
        self._agregar_opciones_comunes(datos)

        diagrama = subparsers.add_parser('diagrama', aliases=['diagram'],
                                         help='Dibujar la cadena de pruebas de signo con Graphviz')
        diagrama.add_argument('archivo', help='JSON de la función lineal extendida')
        diagrama.add_argument('-f', '--formato-imagen', choices=FORMATOS_IMAGEN, default='png',
                              help='Formato de la imagen (por defecto: png)')
        diagrama.add_argument('-o', '--salida', default=VALORES_POR_DEFECTO['directorio_salida'],
                              help='Directorio de salida')

        return parser

    @staticmethod
    def _agregar_opciones_comunes(subparser):
        subparser.add_argument('--denominador-grilla', '--grid-denominator', type=int,
                               default=VALORES_POR_DEFECTO['denominador_grilla'],
                               help=f"Cota de denominadores de la grilla de Farey "
                                    f"(por defecto: {VALORES_POR_DEFECTO['denominador_grilla']})")
        subparser.add_argument('--semilla', '--seed', type=int, default=VALORES_POR_DEFECTO['semilla'],
                               help='Semilla del generador aleatorio (por defecto: 0)')
        subparser.add_argument('--precision', type=int, default=VALORES_POR_DEFECTO['precision'],
                               help=f"Cifras de los valores trascendentes (por defecto: {VALORES_POR_DEFECTO['precision']})")
        subparser.add_argument('--esperado', '--expect', metavar='VEREDICTO',
                               help='Veredicto esperado; el código de salida es 0 sólo si coincide')
        subparser.add_argument('--formato', '--format', choices=FORMATOS_VALIDOS,
                               default=VALORES_POR_DEFECTO['formato'],
                               help='Formato de las tablas y datos generados (por defecto: json)')
        subparser.add_argument('-o', '--salida', default=VALORES_POR_DEFECTO['directorio_salida'],
                               help='Directorio de salida (por defecto: resultados)')

    def verificar_graphviz(self):
        """
        Verifica la instalación de Graphviz y muestra el estado en consola.
        """
        info = verificar_instalacion()
        print("Estado de Graphviz:")
        print(f"  Librería Python: {'✅' if info['libreria_instalada'] else '❌'}")
        print(f"  Ejecutable: {'✅' if info['ejecutable_disponible'] else '❌'}")
        print(f"  Versión: {info.get('version') or 'desconocida'}")
        print(f"  Mensaje: {info['mensaje']}")
        return 0

    def ejecutar_operacion(self, args, procesador, ui) -> int:
        """
        Ejecuta el subcomando pedido y devuelve el código de salida.
        """
        comando = self._comando_canonico(args.comando)
        try:
            if comando == 'evaluar':
                ui.mostrar_valor(procesador.evaluar(args.archivo, args.punto))
                return 0

            if comando == 'diagrama':
                ui.mostrar_archivo(procesador.diagrama(args.archivo, args.salida, args.formato_imagen))
                return 0

            config = ConfiguracionEjecucion.desde_argumentos(args)

            if comando == 'datos-grafico':
                ui.mostrar_archivo(procesador.datos_grafico(config))
                return 0

            if comando == 'axiomas':
                veredicto = procesador.axiomas(config)
            else:
                accion = ACCIONES_PUNTAJE[args.accion]
                veredicto = getattr(procesador, accion)(config)

            ui.mostrar_veredicto(veredicto)
            return procesador.codigo_salida(veredicto, config.esperado)

        except (ValueError, ImportError, OSError) as e:
            ui.mostrar_error(str(e))
            return CODIGO_ERROR_ENTRADA

    @staticmethod
    def _comando_canonico(comando: str) -> str:
        alias = {
            'eval': 'evaluar', 'axioms': 'axiomas', 'score': 'puntaje',
            'plotdata': 'datos-grafico', 'diagram': 'diagrama',
        }
        return alias.get(comando, comando)

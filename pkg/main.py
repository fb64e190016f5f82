#!/usr/bin/env python3
"""
Programa principal del analizador de funciones lineales extendidas:
evaluación, subgradientes extendidos y construcción de reglas de puntaje propias.
"""

import os
import sys

# Agregar la raíz del proyecto al path para importar el paquete src
raiz_proyecto = os.path.dirname(os.path.abspath(__file__))
if raiz_proyecto not in sys.path:
    sys.path.insert(0, raiz_proyecto)

try:
    from src.interfaces.cli import InterfazLineaComandos, CODIGO_ERROR_ENTRADA
    from src.interfaces.ui import InterfazUsuario
    from src.core.procesador import ProcesadorAnalisis
    from src.utils.logger import Logger
except ImportError as e:
    print(f"Error al importar módulos: {e}", file=sys.stderr)
    print("Asegúrate de que la estructura de directorios esté correcta.", file=sys.stderr)
    sys.exit(2)


def main(argv=None):
    """Función principal del programa. Devuelve el código de salida."""
    args = None
    try:
        logger = Logger()

        cli = InterfazLineaComandos()
        args = cli.parse_args(argv)

        if getattr(args, 'verbose', False):
            logger.set_level('DEBUG')

        if getattr(args, 'verificar_graphviz', False):
            return cli.verificar_graphviz()

        if not args.comando:
            cli.parser.print_help(sys.stderr)
            return CODIGO_ERROR_ENTRADA

        procesador = ProcesadorAnalisis(logger)
        ui = InterfazUsuario(logger)

        return cli.ejecutar_operacion(args, procesador, ui)

    except KeyboardInterrupt:
        print("\n🚫 Operación cancelada por el usuario", file=sys.stderr)
        return 1
    except Exception as e:
        print(f"❌ Error inesperado: {e}", file=sys.stderr)
        if args is not None and getattr(args, 'verbose', False):
            import traceback
            traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())

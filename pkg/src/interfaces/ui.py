"""
Interfaz de usuario para mostrar resultados.

La salida estándar lleva sólo los resultados (valores, veredictos en JSON, rutas generadas); los
mensajes de progreso y errores pasan por el logger, que escribe en la salida de error.
"""

import json
import sys
from typing import Any, Dict

from src.utils.logger import Iconos, Logger


class InterfazUsuario:
    """
    Presenta valores y veredictos al usuario.
    """

    def __init__(self, logger: Logger, salida=None):
        """Inicializa la interfaz con un logger y el flujo de resultados (por defecto sys.stdout)."""
        self.logger = logger
        self.salida = salida

    def mostrar_error(self, mensaje: str):
        """Muestra un mensaje de error al usuario con un único icono."""
        self.logger.error(mensaje.removeprefix(Iconos.ERROR).lstrip())

    def mostrar_info(self, mensaje: str):
        """Muestra un mensaje informativo al usuario."""
        self.logger.info(mensaje)

    def mostrar_valor(self, resultado: Dict[str, Any]):
        """Imprime el valor y, si la hay, la clase del punto (Plus, Minus o Finite)."""
        self._imprimir(resultado['valor'])
        if 'clase' in resultado:
            self._imprimir(f"clase: {resultado['clase']}")

    def mostrar_veredicto(self, veredicto: Dict[str, Any]):
        """Imprime el veredicto como JSON."""
        self._imprimir(json.dumps(veredicto, indent=2, ensure_ascii=False))

    def mostrar_archivo(self, ruta: str):
        self._imprimir(str(ruta))

    def _imprimir(self, texto: str):
        print(texto, file=self.salida or sys.stdout)

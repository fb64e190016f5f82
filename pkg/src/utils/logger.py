"""
Sistema de logging y mensajes con iconos para el analizador de funciones lineales extendidas.

Proporciona utilidades para mostrar mensajes informativos, advertencias y errores con iconos y niveles de detalle
configurables. Los mensajes van a la salida de error; la salida estándar queda para los resultados.
"""

import sys
from enum import Enum


class NivelLog(Enum):
    """
    Niveles de logging disponibles.
    """
    DEBUG = 0
    INFO = 1
    WARNING = 2
    ERROR = 3


class Iconos:
    """
    Iconos Unicode para diferentes tipos de mensajes y estados del sistema.
    """

    # Objetos del dominio
    FUNCION = "\U0001F4D0"
    DIRECCION = "➡️"
    CONVEXA = "\U0001F4C9"
    TABLA = "\U0001F4CB"
    GRILLA = "\U0001F4CF"
    GRAFICO = "\U0001F3A8"

    # Procesos
    EVALUACION = "\U0001F522"
    AXIOMAS = "\U0001F9EA"
    VEREDICTO = "⚖️"
    CERTIFICADO = "\U0001F4DC"
    RECONSTRUCCION = "\U0001F504"
    VALIDACION = "✅"
    ERROR = "❌"
    ADVERTENCIA = "⚠️"
    INFO = "ℹ️"

    # Estados de operación
    CARGANDO = "\U0001F4C2"
    GUARDANDO = "\U0001F4BE"
    PROCESANDO = "⚙️"
    COMPLETADO = "✅"
    FALLO = "❌"

    # Navegación y UI
    FLECHA_DERECHA = "➤"
    ARCHIVO = "\U0001F4C4"
    DIRECTORIO = "\U0001F4C1"
    ESTADISTICA = "\U0001F4CA"


class Logger:
    """
    Sistema de logging con iconos para mensajes de depuración, información, advertencia y error.
    Permite configurar el nivel de detalle mostrado.
    """

    def __init__(self, level: NivelLog = NivelLog.INFO, flujo=None):
        """
        Inicializa el logger con un nivel de logging.
        Args:
            level (NivelLog): Nivel de logging inicial.
            flujo: destino de los mensajes (por defecto sys.stderr).
        """
        self.level = level
        self.flujo = flujo
        self.separador = "-" * 50

    def set_level(self, level: str):
        """
        Establece el nivel de logging a partir de un string.
        Args:
            level (str): 'DEBUG', 'INFO', 'WARNING' o 'ERROR'.
        """
        level_map = {
            'DEBUG': NivelLog.DEBUG,
            'INFO': NivelLog.INFO,
            'WARNING': NivelLog.WARNING,
            'ERROR': NivelLog.ERROR
        }
        self.level = level_map.get(level.upper(), NivelLog.INFO)

    def debug(self, mensaje: str, icono: str = Iconos.INFO):
        if self.level.value <= NivelLog.DEBUG.value:
            self._print(f"{icono} DEBUG: {mensaje}")

    def info(self, mensaje: str, icono: str = Iconos.INFO):
        if self.level.value <= NivelLog.INFO.value:
            self._print(f"{icono} {mensaje}")

    def warning(self, mensaje: str, icono: str = Iconos.ADVERTENCIA):
        if self.level.value <= NivelLog.WARNING.value:
            self._print(f"{icono} {mensaje}")

    def error(self, mensaje: str, icono: str = Iconos.ERROR):
        if self.level.value <= NivelLog.ERROR.value:
            self._print(f"{icono} {mensaje}")

    def success(self, mensaje: str, icono: str = Iconos.COMPLETADO):
        """
        Muestra un mensaje de éxito (alias de info con icono de completado).
        """
        self.info(mensaje, icono)

    def _print(self, mensaje: str):
        print(mensaje, file=self.flujo or sys.stderr, flush=True)

    @staticmethod
    def texto_con_icono(icono: str, texto: str) -> str:
        """Combina un icono con texto."""
        return f"{icono} {texto}"

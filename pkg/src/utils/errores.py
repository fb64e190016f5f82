"""
Jerarquía de errores del analizador de funciones lineales extendidas.

Todas las clases derivan de ValueError, igual que los errores de validación del resto del
proyecto, y guardan en `codigo` el nombre estable con el que se reportan en la línea de comandos.
"""


class ErrorAnalisis(ValueError):
    """
    Error base. El mensaje se muestra con el icono de error y el código entre corchetes.
    """

    codigo = "AnalysisError"

    def __init__(self, mensaje: str = ""):
        super().__init__(mensaje or self.codigo)
        self.mensaje = mensaje or self.codigo

    def __str__(self):
        return f"❌ [{self.codigo}] {self.mensaje}"


# Aritmética extendida
class SumaIlegal(ErrorAnalisis):
    codigo = "IllegalSum"


# Geometría
class DimensionesIncompatibles(ErrorAnalisis):
    codigo = "DimensionMismatch"


class VectorNulo(ErrorAnalisis):
    codigo = "ZeroVector"


class EntradaDependiente(ErrorAnalisis):
    codigo = "DependentInput"


class SinSoporte(ErrorAnalisis):
    codigo = "NoSupport"


class PrecondicionViolada(ErrorAnalisis):
    codigo = "PreconditionViolated"


# Funciones lineales extendidas
class NoOrtogonales(ErrorAnalisis):
    codigo = "NotOrthogonal"


class ColaNoOrtogonal(ErrorAnalisis):
    codigo = "TailNotOrthogonal"


class DireccionNula(ErrorAnalisis):
    codigo = "ZeroDirection"


class DemasiadoProfunda(ErrorAnalisis):
    codigo = "TooDeep"


class ContieneOrigen(ErrorAnalisis):
    codigo = "ContainsOrigin"


# Funciones convexas
class NoFinitaEnPunto(ErrorAnalisis):
    codigo = "NotFiniteAtPoint"


class AnclaFueraDeDominio(ErrorAnalisis):
    codigo = "AnchorOutsideDomain"


class SelectorNoDisponible(ErrorAnalisis):
    codigo = "SelectorUnavailable"


class FuncionImpropia(ErrorAnalisis):
    codigo = "ImproperFunction"


# Reglas de puntaje
class EtiquetaDesconocida(ErrorAnalisis):
    codigo = "UnknownLabel"


class PrediccionFueraDeDominio(ErrorAnalisis):
    codigo = "PredOutsideDomain"


class NoRegular(ErrorAnalisis):
    codigo = "NotRegular"


class PrediccionDesconocida(ErrorAnalisis):
    codigo = "UnknownPred"


class NoPropia(ErrorAnalisis):
    codigo = "NotProper"


# Catálogo
class NoMonotona(ErrorAnalisis):
    codigo = "NotMonotone"


class IntervaloInvalido(ErrorAnalisis):
    codigo = "BadInterval"


class NoBinario(ErrorAnalisis):
    codigo = "NonBinary"


# Archivos y argumentos
class ErrorEntrada(ErrorAnalisis):
    codigo = "InputError"

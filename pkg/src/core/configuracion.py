"""
Configuración de una ejecución del analizador.

Agrupa en un único objeto inmutable los parámetros que llegan desde la línea de comandos, con los
valores por defecto del proyecto y su validación.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

from src.utils.errores import ErrorEntrada

VALORES_POR_DEFECTO = {
    'denominador_grilla': 16,
    'semilla': 0,
    'precision': 50,
    'formato': 'json',
    'directorio_salida': 'resultados',
    'ensayos': 1000,
    'puntos': 101,
}

FORMATOS_VALIDOS = ('json', 'csv')


@dataclass(frozen=True)
class ConfiguracionEjecucion:
    """
    Parámetros de una ejecución.

    Atributos:
        comando (str): subcomando ejecutado.
        rutas (tuple): archivos de entrada.
        denominador_grilla (int): cota de denominadores de la grilla de Farey (≥ 1).
        semilla (int): semilla del generador aleatorio.
        precision (int): cifras significativas de los valores trascendentes (≥ 10).
        formato (str): 'json' o 'csv'.
        directorio_salida (str): carpeta donde se escriben los archivos.
        esperado (str): veredicto esperado, si se pidió comprobarlo.
        ensayos (int): muestras para verificar axiomas.
        puntos (int): puntos de los datos de gráfico.
        resultados (tuple): etiquetas de resultados para las entradas del catálogo.
    """
    comando: str
    rutas: Tuple[str, ...] = ()
    denominador_grilla: int = VALORES_POR_DEFECTO['denominador_grilla']
    semilla: int = VALORES_POR_DEFECTO['semilla']
    precision: int = VALORES_POR_DEFECTO['precision']
    formato: str = VALORES_POR_DEFECTO['formato']
    directorio_salida: str = VALORES_POR_DEFECTO['directorio_salida']
    esperado: Optional[str] = None
    ensayos: int = VALORES_POR_DEFECTO['ensayos']
    puntos: int = VALORES_POR_DEFECTO['puntos']
    resultados: Optional[Tuple[str, ...]] = field(default=None)

    def __post_init__(self):
        if self.denominador_grilla < 1:
            raise ErrorEntrada(f"El denominador de la grilla debe ser ≥ 1, se recibió {self.denominador_grilla}")
        if self.precision < 10:
            raise ErrorEntrada(f"La precisión debe ser ≥ 10 dígitos, se recibió {self.precision}")
        if self.formato not in FORMATOS_VALIDOS:
            raise ErrorEntrada(f"Formato '{self.formato}' no reconocido. Válidos: {', '.join(FORMATOS_VALIDOS)}")
        if self.ensayos < 1:
            raise ErrorEntrada("La cantidad de ensayos debe ser positiva")
        if self.puntos < 2:
            raise ErrorEntrada("Los datos de gráfico necesitan al menos dos puntos")

    @classmethod
    def desde_argumentos(cls, args) -> 'ConfiguracionEjecucion':
        """Construye la configuración a partir del Namespace de argparse."""
        rutas = tuple(r for r in (getattr(args, 'archivo', None), getattr(args, 'objetivo', None)) if r)
        resultados = getattr(args, 'resultados', None)
        if resultados:
            resultados = tuple(e.strip() for e in resultados.split(',') if e.strip())
        return cls(
            comando=args.comando,
            rutas=rutas,
            denominador_grilla=getattr(args, 'denominador_grilla', VALORES_POR_DEFECTO['denominador_grilla']),
            semilla=getattr(args, 'semilla', VALORES_POR_DEFECTO['semilla']),
            precision=getattr(args, 'precision', VALORES_POR_DEFECTO['precision']),
            formato=getattr(args, 'formato', VALORES_POR_DEFECTO['formato']),
            directorio_salida=getattr(args, 'salida', VALORES_POR_DEFECTO['directorio_salida']),
            esperado=getattr(args, 'esperado', None),
            ensayos=getattr(args, 'ensayos', VALORES_POR_DEFECTO['ensayos']),
            puntos=getattr(args, 'puntos', VALORES_POR_DEFECTO['puntos']),
            resultados=resultados or None,
        )

    def nombre_grilla(self, n: int) -> str:
        """Nombre estable de la grilla de Farey usada, para los veredictos."""
        return f"farey:{n}:{self.denominador_grilla}"

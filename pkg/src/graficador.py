"""
Módulo para dibujar funciones lineales extendidas usando Graphviz.

Una función lineal extendida se evalúa como una cadena de pruebas de signo: en cada dirección v_i
el producto v_i · x decide +∞ (positivo), -∞ (negativo) o pasar a la siguiente (cero); al final
se evalúa la cola w · x. El diagrama muestra esa cadena.
"""

try:
    import graphviz

    GRAPHVIZ_DISPONIBLE = True
except ImportError:
    GRAPHVIZ_DISPONIBLE = False

import os

from src.lineal_extendida import LinealExtendida
from src.reales_extendidos import formatear_racional

FORMATOS_IMAGEN = ('png', 'svg', 'pdf')


def _vector_texto(v) -> str:
    return "(" + ", ".join(formatear_racional(c) for c in v) + ")"


class GraficadorLinealExtendida:
    """
    Genera el diagrama de decisión de una función lineal extendida.
    """

    def __init__(self):
        if not GRAPHVIZ_DISPONIBLE:
            raise ImportError(
                "Graphviz no está instalado. Instálelo con: pip install graphviz\n"
                "También necesita el software Graphviz: https://graphviz.org/download/"
            )

        self.configuracion = {
            'formato': 'png',
            'motor': 'dot',
            'dpi': '150',
            'color_prueba': 'lightblue',
            'color_mas_infinito': 'lightcoral',
            'color_menos_infinito': 'lightgreen',
            'color_cola': 'gold',
            'fuente': 'Arial',
            'tamaño_fuente': '12'
        }

    def configurar_estilo(self, **kwargs):
        """
        Configura el estilo de los diagramas (formato, motor, dpi, colores, fuente).
        """
        self.configuracion.update(kwargs)

    def construir_diagrama(self, f: LinealExtendida, nombre: str = "funcion", incluir_titulo: bool = True):
        """
        Arma el objeto graphviz.Digraph sin renderizarlo.
        """
        if not GRAPHVIZ_DISPONIBLE:
            raise ImportError("Graphviz no está disponible")

        dot = graphviz.Digraph(name=nombre, engine=self.configuracion['motor'],
                               format=self.configuracion['formato'])
        dot.attr(dpi=self.configuracion['dpi'], fontname=self.configuracion['fuente'],
                 fontsize=self.configuracion['tamaño_fuente'], rankdir='TB')
        dot.attr('node', style='filled', fontname=self.configuracion['fuente'],
                 fontsize=self.configuracion['tamaño_fuente'])
        dot.attr('edge', fontname=self.configuracion['fuente'])

        if incluir_titulo:
            dot.attr(label=f"{nombre}\\nd = {f.dim}, profundidad = {f.profundidad}", labelloc='t')

        dot.node('mas_infinito', '+∞', shape='box', fillcolor=self.configuracion['color_mas_infinito'])
        dot.node('menos_infinito', '-∞', shape='box', fillcolor=self.configuracion['color_menos_infinito'])
        dot.node('cola', f"w · x\\nw = {_vector_texto(f.cola)}", shape='box',
                 fillcolor=self.configuracion['color_cola'])

        for i, v in enumerate(f.direcciones):
            dot.node(f"v{i}", f"v{i + 1} · x\\nv{i + 1} = {_vector_texto(v)}", shape='diamond',
                     fillcolor=self.configuracion['color_prueba'])
            dot.edge(f"v{i}", 'mas_infinito', label='> 0')
            dot.edge(f"v{i}", 'menos_infinito', label='< 0')
            siguiente = f"v{i + 1}" if i + 1 < f.profundidad else 'cola'
            dot.edge(f"v{i}", siguiente, label='= 0')
        return dot

    def generar_diagrama(self, f: LinealExtendida, nombre_archivo: str, directorio: str = "",
                         incluir_titulo: bool = True) -> str:
        """
        Genera el diagrama y lo guarda en el formato configurado.

        Returns:
            str: Ruta del archivo generado.
        """
        if directorio and not os.path.exists(directorio):
            os.makedirs(directorio, exist_ok=True)
        dot = self.construir_diagrama(f, nombre_archivo, incluir_titulo)
        ruta_completa = os.path.join(directorio, nombre_archivo) if directorio else nombre_archivo
        return dot.render(ruta_completa, cleanup=True)


def verificar_instalacion():
    """
    Verifica si Graphviz está correctamente instalado.

    Returns:
        dict: información sobre la instalación
    """
    info = {
        'libreria_instalada': GRAPHVIZ_DISPONIBLE,
        'ejecutable_disponible': False,
        'version': None,
        'mensaje': ''
    }

    if not GRAPHVIZ_DISPONIBLE:
        info['mensaje'] = (
            "La librería graphviz no está instalada.\n"
            "Instálela con: pip install graphviz\n"
            "También necesita el software Graphviz: https://graphviz.org/download/"
        )
        return info

    try:
        version = graphviz.version()
        info['ejecutable_disponible'] = True
        info['version'] = ".".join(str(parte) for parte in version)
        info['mensaje'] = "✅ Graphviz está correctamente instalado y configurado"
    except graphviz.ExecutableNotFound as e:
        info['mensaje'] = (
            f"❌ La librería graphviz está instalada pero el ejecutable no está disponible.\n"
            f"Error: {e}\n"
            f"Instale el software Graphviz desde: https://graphviz.org/download/"
        )

    return info

"""
Módulo para lectura y escritura de archivos del analizador.

Soporta funciones lineales extendidas, funciones afines extendidas y tablas de puntajes en JSON
(racionales exactos como texto "a/b") y exporta tablas, veredictos y datos de gráfico en JSON o CSV
(decimales a la precisión configurada). Los errores de lectura indican el campo que falla.
"""

import csv
import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence, Union

from src.convexas import AfinExtendida
from src.geometria import VectorRacional
from src.lineal_extendida import LinealExtendida
from src.puntajes import ConjuntoResultados, TablaPuntajes
from src.reales_extendidos import (
    RealExtendido,
    formatear_decimal,
    formatear_racional,
    parsear_racional,
    parsear_real_extendido,
)
from src.utils.errores import ErrorEntrada


class ManejadorArchivos:
    """
    Clase para manejar la entrada y salida de archivos.
    Valida la estructura de los JSON de entrada y escribe resultados deterministas.
    """

    @staticmethod
    def leer_json(ruta_archivo) -> Any:
        """
        Lee un archivo JSON.

        Raises:
            ErrorEntrada: si el archivo no existe, no se puede leer o no es JSON válido.
        """
        try:
            with open(ruta_archivo, 'r', encoding='utf-8') as archivo:
                return json.load(archivo)
        except FileNotFoundError:
            raise ErrorEntrada(f"Archivo no encontrado: {ruta_archivo}")
        except PermissionError:
            raise ErrorEntrada(f"Sin permisos para leer el archivo: {ruta_archivo}")
        except json.JSONDecodeError as e:
            raise ErrorEntrada(f"Error al parsear JSON en línea {e.lineno}: {e.msg}")
        except UnicodeDecodeError:
            raise ErrorEntrada(f"Error de codificación. El archivo debe estar en UTF-8: {ruta_archivo}")

    @staticmethod
    def _vector(valor, campo: str) -> VectorRacional:
        if not isinstance(valor, list):
            raise ErrorEntrada(f"El campo '{campo}' debe ser una lista")
        coordenadas = []
        for i, c in enumerate(valor):
            try:
                coordenadas.append(parsear_racional(c))
            except ValueError:
                raise ErrorEntrada(f"Valor inválido en '{campo}[{i}]': {c!r}")
        return tuple(coordenadas)

    @staticmethod
    def lineal_extendida_desde_diccionario(datos: Dict, prefijo: str = "") -> LinealExtendida:
        """
        Construye una LinealExtendida desde {"dim", "dirs", "tail"}. Las direcciones se canonicalizan;
        las no ortogonales se rechazan.
        """
        if not isinstance(datos, dict):
            raise ErrorEntrada(f"'{prefijo or 'raíz'}' debe ser un objeto")
        for campo in ('dim', 'dirs', 'tail'):
            if campo not in datos:
                raise ErrorEntrada(f"Campo requerido '{prefijo}{campo}' no encontrado")
        dim = datos['dim']
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise ErrorEntrada(f"'{prefijo}dim' debe ser un entero no negativo")
        if not isinstance(datos['dirs'], list):
            raise ErrorEntrada(f"'{prefijo}dirs' debe ser una lista de vectores")
        direcciones = tuple(ManejadorArchivos._vector(v, f"{prefijo}dirs[{j}]")
                            for j, v in enumerate(datos['dirs']))
        cola = ManejadorArchivos._vector(datos['tail'], f"{prefijo}tail")
        return LinealExtendida(dim, direcciones, cola)

    @staticmethod
    def cargar_funcion(ruta_archivo) -> Union[LinealExtendida, AfinExtendida]:
        """
        Carga una función lineal extendida o, si el JSON tiene "f", "anchor" y "offset", una afín extendida.
        """
        datos = ManejadorArchivos.leer_json(ruta_archivo)
        if isinstance(datos, dict) and 'f' in datos:
            for campo in ('anchor', 'offset'):
                if campo not in datos:
                    raise ErrorEntrada(f"Campo requerido '{campo}' no encontrado")
            f = ManejadorArchivos.lineal_extendida_desde_diccionario(datos['f'], "f.")
            ancla = ManejadorArchivos._vector(datos['anchor'], "anchor")
            try:
                desplazamiento = parsear_racional(datos['offset'])
            except ValueError:
                raise ErrorEntrada(f"Valor inválido en 'offset': {datos['offset']!r}")
            return AfinExtendida(f, ancla, desplazamiento)
        return ManejadorArchivos.lineal_extendida_desde_diccionario(datos)

    @staticmethod
    def cargar_tabla(ruta_archivo) -> TablaPuntajes:
        """Carga una tabla {"outcomes", "preds", "values"}."""
        datos = ManejadorArchivos.leer_json(ruta_archivo)
        if not isinstance(datos, dict):
            raise ErrorEntrada("La tabla debe ser un objeto JSON")
        for campo in ('outcomes', 'preds', 'values'):
            if campo not in datos:
                raise ErrorEntrada(f"Campo requerido '{campo}' no encontrado en la tabla")
        if not isinstance(datos['outcomes'], list) or not datos['outcomes']:
            raise ErrorEntrada("'outcomes' debe ser una lista no vacía de etiquetas")
        resultados = ConjuntoResultados(tuple(datos['outcomes']))
        if not isinstance(datos['preds'], list):
            raise ErrorEntrada("'preds' debe ser una lista de distribuciones")
        predicciones = [ManejadorArchivos._vector(p, f"preds[{i}]") for i, p in enumerate(datos['preds'])]
        if not isinstance(datos['values'], list):
            raise ErrorEntrada("'values' debe ser una matriz")
        valores = []
        for i, fila in enumerate(datos['values']):
            if not isinstance(fila, list):
                raise ErrorEntrada(f"'values[{i}]' debe ser una lista")
            try:
                valores.append(tuple(parsear_real_extendido(v) for v in fila))
            except ValueError as e:
                raise ErrorEntrada(f"Valor inválido en 'values[{i}]': {e}")
        return TablaPuntajes(resultados, tuple(predicciones), tuple(valores))

    @staticmethod
    def vector_a_lista(v: Iterable) -> List[str]:
        return [formatear_racional(c) for c in v]

    @staticmethod
    def lineal_extendida_a_diccionario(f: LinealExtendida) -> Dict:
        return {
            'dim': f.dim,
            'dirs': [ManejadorArchivos.vector_a_lista(v) for v in f.direcciones],
            'tail': ManejadorArchivos.vector_a_lista(f.cola),
        }

    @staticmethod
    def afin_a_diccionario(h: AfinExtendida) -> Dict:
        return {
            'f': ManejadorArchivos.lineal_extendida_a_diccionario(h.f),
            'anchor': ManejadorArchivos.vector_a_lista(h.ancla),
            'offset': formatear_racional(h.desplazamiento),
        }

    @staticmethod
    def tabla_a_diccionario(tabla: TablaPuntajes) -> Dict:
        return {
            'outcomes': list(tabla.resultados.etiquetas),
            'preds': [ManejadorArchivos.vector_a_lista(p.probs) for p in tabla.predicciones],
            'values': [[str(v) for v in fila] for fila in tabla.valores],
            'regular': tabla.regular,
        }

    @staticmethod
    def guardar_json(datos: Any, ruta_archivo) -> str:
        """Escribe JSON con indentación fija y salto de línea final."""
        ruta = Path(ruta_archivo)
        try:
            ruta.parent.mkdir(parents=True, exist_ok=True)
            with open(ruta, 'w', encoding='utf-8') as archivo:
                json.dump(datos, archivo, indent=2, ensure_ascii=False)
                archivo.write('\n')
        except OSError as e:
            raise IOError(f"Error al guardar archivo: {e}")
        return str(ruta)

    @staticmethod
    def guardar_csv(encabezado: Sequence[str], filas: Iterable[Sequence[str]], ruta_archivo) -> str:
        ruta = Path(ruta_archivo)
        try:
            ruta.parent.mkdir(parents=True, exist_ok=True)
            with open(ruta, 'w', encoding='utf-8', newline='') as archivo:
                escritor = csv.writer(archivo, lineterminator='\n')
                escritor.writerow(encabezado)
                escritor.writerows(filas)
        except OSError as e:
            raise IOError(f"Error al guardar archivo: {e}")
        return str(ruta)

    @staticmethod
    def filas_tabla_csv(tabla: TablaPuntajes, precision: int) -> List[List[str]]:
        """Una fila por par (predicción, resultado), con decimales a `precision` cifras."""
        filas = []
        for p, fila in zip(tabla.predicciones, tabla.valores):
            coordenadas = [formatear_decimal(RealExtendido.finito(c), precision) for c in p.probs]
            for etiqueta, valor in zip(tabla.resultados, fila):
                filas.append(coordenadas + [etiqueta, formatear_decimal(valor, precision)])
        return filas

    @staticmethod
    def guardar_tabla_csv(tabla: TablaPuntajes, ruta_archivo, precision: int) -> str:
        encabezado = [f"p({etiqueta})" for etiqueta in tabla.resultados] + ['outcome', 'score']
        return ManejadorArchivos.guardar_csv(encabezado, ManejadorArchivos.filas_tabla_csv(tabla, precision),
                                             ruta_archivo)

    @staticmethod
    def parsear_punto(texto: str) -> VectorRacional:
        """Interpreta "1,2,3" o "1/2, -3" como vector racional."""
        partes = [parte.strip() for parte in str(texto).split(',')]
        if partes == ['']:
            return ()
        try:
            return tuple(parsear_racional(parte) for parte in partes)
        except ValueError as e:
            raise ErrorEntrada(f"Punto inválido '{texto}': {e}")

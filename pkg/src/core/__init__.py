# Orquestación de las operaciones y configuración de cada ejecución

# Línea de comandos y presentación de resultados

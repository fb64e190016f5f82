# Paquete principal del analizador de funciones lineales extendidas y reglas de puntaje

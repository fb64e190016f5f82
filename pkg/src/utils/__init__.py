# Errores, registro de mensajes, muestreo reproducible y equivalencia de funciones

"""Configuración común de las pruebas."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import settings
from sympy.solvers.simplex import InfeasibleLPError, linprog

from src.lineal_extendida import LinealExtendida

settings.register_profile("deterministico", derandomize=True, deadline=None, max_examples=200)
settings.load_profile("deterministico")


@pytest.fixture
def f_introduccion() -> LinealExtendida:
    """Primero el signo de z, luego el de y, y si ambos son cero vale x."""
    return LinealExtendida(3, ((0, 0, 1), (0, 1, 0)), (1, 0, 0))


def _origen_en_envolvente(vertices) -> bool:
    """Factibilidad de λ ≥ 0, Σλ = 1, Σλᵢzᵢ = 0, resuelta sin pasar por hiperplanos de soporte."""
    m = len(vertices)
    dim = len(vertices[0])

    def racional(x):
        x = Fraction(x)
        return sympy.Rational(x.numerator, x.denominator)

    cotas = [[-1 if i == j else 0 for j in range(m)] for i in range(m)]
    igualdades = [[racional(z[k]) for z in vertices] for k in range(dim)] + [[1] * m]
    try:
        linprog([0] * m, cotas, [0] * m, igualdades, [0] * dim + [1])
    except InfeasibleLPError:
        return False
    return True


@pytest.fixture
def origen_en_envolvente():
    return _origen_en_envolvente

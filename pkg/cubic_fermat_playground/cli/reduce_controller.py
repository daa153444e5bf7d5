from cubic_fermat_playground.cli.output import exact
from cubic_fermat_playground.core.grammar import parse_rational
from cubic_fermat_playground.core.integers import reduce_equation


class ReduceController:
    def render(self, a: str, c: str) -> dict:
        a_value, c_value = parse_rational(a), parse_rational(c)
        k, z_scale = reduce_equation(a_value, c_value)
        return {
            "a": exact(a_value),
            "c": exact(c_value),
            "k": exact(k),
            "z_scale": exact(z_scale),
        }

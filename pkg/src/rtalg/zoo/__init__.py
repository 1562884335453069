"""Built-in example algebras and the structure checks that go with them."""
from .families import (ALIASES, FAMILIES, ZooError, build, list_zoo, tensor_product)

__all__ = ["ALIASES", "FAMILIES", "ZooError", "build", "list_zoo", "tensor_product"]
from .checks import (CheckReport, DufloResult, ZeroWeightError, check_anti_involution,  # noqa: E402
                     check_hopf, find_duflo_delta, generator_weights, gl_duflo_candidate,
                     restrict)
from .hecke import (SymPolynomial, expand_l_series, expand_r_series, l_series_j_identity,  # noqa: E402
                    linv_identity, r_transpose_identity, symmetrize)

__all__ += ["CheckReport", "DufloResult", "ZeroWeightError", "check_anti_involution",
            "check_hopf", "find_duflo_delta", "generator_weights", "gl_duflo_candidate",
            "restrict", "SymPolynomial", "expand_l_series", "expand_r_series", "l_series_j_identity",
            "linv_identity", "r_transpose_identity", "symmetrize"]

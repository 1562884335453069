"""Presented algebras, PBW normal forms and overlap checking."""
from .kernel import BACKEND
from .presentation import (CARTAN, CLASSES, LOWERING, RAISING, AlgebraEnv, Element,
                           Generator, MissingRuleError, PBWReport, Presentation,
                           PresentationError, Relation)

__all__ = ["BACKEND", "CARTAN", "CLASSES", "LOWERING", "RAISING", "AlgebraEnv", "Element",
           "Generator", "MissingRuleError", "PBWReport", "Presentation", "PresentationError",
           "Relation"]
from .parser import (PresentationFileError, equivalent, export_presentation,  # noqa: E402
                     load_presentation, parse_presentation)

__all__ += ["PresentationFileError", "equivalent", "export_presentation", "load_presentation",
            "parse_presentation"]

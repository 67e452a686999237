from ..frames import PistonScenario
from ..gas_model import critical_mach
from .util import SolutionKind


def classify(sc: PistonScenario) -> SolutionKind:
    if sc.direction == "recede":
        return "rarefaction"

    # the threshold itself belongs to the measure branch
    if sc.mach >= critical_mach(sc.gamma):
        return "measure"

    return "shock"

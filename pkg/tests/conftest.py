import numpy as np
import pytest

from invsemifft.families import FamilySpec, build
from invsemifft.groups import cyclic_group
from invsemifft.structure import SEMIGROUP, FunctionOnS


def make_structure(family, n, label=None):
    lg = cyclic_group(label) if isinstance(label, int) else label
    return build(FamilySpec(family, n, lg))


def random_function(S, rng, real=False):
    vals = rng.normal(size=len(S))
    if not real:
        vals = vals + 1j * rng.normal(size=len(S))
    return FunctionOnS(S, SEMIGROUP, vals)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)

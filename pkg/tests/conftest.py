import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lexigap.domains import BuildConfig, Domain, DomainBase, Structure
from lexigap.types import DIRECT_OBJECT, SyntacticLink, noun, verb

FIXTURES = Path(__file__).parent.parent / "fixtures"


@pytest.fixture
def mini_base() -> DomainBase:
    """Single hand-built domain with the three reference structures."""
    domain = Domain(
        id="D001",
        name="AbrogerMettre",
        words={
            noun("loi"): 1.0, noun("état"): 0.95, noun("situation"): 1.0,
            verb("abroger"): 0.9, verb("mettre"): 0.8,
            verb("maîtriser"): 0.8, noun("décret"): 0.5, verb("voter"): 0.6,
        },
        structures=[
            Structure(verb("abroger"), DIRECT_OBJECT, {noun("loi"): 1.0}),
            Structure(verb("mettre"), SyntacticLink.prep("dans"),
                      {noun("situation"): 1.0}),
            Structure(verb("maîtriser"), DIRECT_OBJECT,
                      {noun("situation"): 1.0}),
        ],
    )
    return DomainBase([domain], BuildConfig())

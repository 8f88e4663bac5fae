import pytest

from labelcap import LabelSet


@pytest.fixture
def ls():
    """Shorthand: ``ls("AC,G")`` parses a DNA label set."""
    return LabelSet.parse


# label sets shared by the cross-method tests
SUITE = (
    "A",
    "AC",
    "AA",
    "ATA",
    "CGCG",
    "AATAA",
    "ACACA",
    "AAGAAGAA",
    "ACGT,GTT",
    "AC,GT,AGCT",
    "AA,CC",
    "AA,CC,AC",
    "CG,A",
    "AC,CA,GA,GC,GG,TA,TC,TG,TT",
)

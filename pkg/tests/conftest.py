import pytest

from surgtorsion.groups import alternating_group, builtin_group
from surgtorsion.knots import unknot
from surgtorsion.record_loader import RecordLoader
from surgtorsion.representations import standard_representation, trivial_representation


@pytest.fixture(scope="session")
def loader():
    return RecordLoader()


@pytest.fixture(scope="session")
def unknot_group():
    return unknot()


@pytest.fixture(scope="session")
def trefoil(loader):
    return loader.load_knot("trefoil.json")


@pytest.fixture(scope="session")
def figure8(loader):
    return loader.load_knot("figure8.json")


@pytest.fixture(scope="session")
def kt(loader):
    return loader.load_knot("kt.json")


@pytest.fixture(scope="session")
def a4():
    return alternating_group(4)


@pytest.fixture(scope="session")
def a5():
    return alternating_group(5)


@pytest.fixture(scope="session")
def trivial():
    return builtin_group("trivial")


@pytest.fixture(scope="session")
def a5_standard(a5):
    return standard_representation(a5)


@pytest.fixture(scope="session")
def trivial_rep(trivial):
    return trivial_representation(trivial, 1)


@pytest.fixture(scope="session")
def kt_a5_classes(kt, a5):
    from surgtorsion.twisted import knot_classes
    return knot_classes(kt, a5)

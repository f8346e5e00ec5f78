import pytest
from hypothesis import settings

from atomspec import FgAbelianGroup, GradedRing
from atomspec.corpus import COX_NAMES, load_corpus_cox

settings.register_profile("ci", deadline=None, max_examples=60)
settings.load_profile("ci")


@pytest.fixture
def z_line():
    """Q[t] with deg(t) = 1."""
    group = FgAbelianGroup.free(1)
    return GradedRing(group, ("t",), (group.element([1]),))


@pytest.fixture
def p112_cox():
    return load_corpus_cox("p112")


@pytest.fixture
def p112_ring(p112_cox):
    return p112_cox.ring


@pytest.fixture(params=COX_NAMES)
def corpus_cox(request):
    return load_corpus_cox(request.param)

import pytest

from surgtorsion.groups import builtin_group
from surgtorsion.homs import SearchConstraint, count_homomorphism_classes, enumerate_surjections, filter_classes
from surgtorsion.presentation import FinitePresentation, GroupWord


def _conjugate(marked):
    return SearchConstraint(conjugate_generators=marked.generators)


def test_trefoil_onto_s3_has_one_class(trefoil):
    s3 = builtin_group("S3")
    classes = enumerate_surjections(trefoil.presentation, s3, _conjugate(trefoil))
    assert len(classes) == 1
    h = classes[0]
    assert all(s3.element_order_idx(h.image(g)) == 2 for g in trefoil.generators)


def test_trefoil_onto_c3(trefoil):
    assert count_homomorphism_classes(trefoil.presentation, builtin_group("C3"), _conjugate(trefoil)) == 2


def test_figure_eight_has_no_three_colouring(figure8):
    assert count_homomorphism_classes(figure8.presentation, builtin_group("S3"), _conjugate(figure8)) == 0


def test_unknot_onto_cyclic_and_nonabelian(unknot_group):
    assert count_homomorphism_classes(unknot_group.presentation, builtin_group("C5")) == 4
    assert count_homomorphism_classes(unknot_group.presentation, builtin_group("S3")) == 0


def test_unconstrained_search_matches_gauge_fixed_search(trefoil):
    s3 = builtin_group("S3")
    assert count_homomorphism_classes(trefoil.presentation, s3) == \
        count_homomorphism_classes(trefoil.presentation, s3, _conjugate(trefoil))


def test_free_group_classes_are_orbit_minimal():
    s3 = builtin_group("S3")
    free = FinitePresentation(("a", "b"))
    classes = enumerate_surjections(free, s3)
    # generating pairs of S3 up to simultaneous conjugation: 18 pairs, free action of order 6
    assert len(classes) == 3
    for h in classes:
        assert s3.orbit_representative_idx(h.images) == h.images
        assert s3.generates_idx(h.images)


def test_allowed_images_restrict_the_search():
    c6 = builtin_group("C6")
    free = FinitePresentation(("a",))
    generators = [x for x in range(c6.order) if c6.element_order_idx(x) == 6]
    allowed = SearchConstraint(allowed=(("a", frozenset(generators[:1])),))
    assert len(enumerate_surjections(free, c6, allowed)) == 1


def test_filter_classes_kills_words(trefoil):
    c3 = builtin_group("C3")
    classes = enumerate_surjections(trefoil.presentation, c3, _conjugate(trefoil))
    assert filter_classes(classes, [GroupWord.generator(trefoil.meridian, 3)]) == classes
    assert filter_classes(classes, [GroupWord.generator(trefoil.meridian)]) == []


@pytest.mark.parametrize("group", ["A4", "S3"])
def test_longitude_commutes_with_meridian(trefoil, group):
    g = builtin_group(group)
    for h in enumerate_surjections(trefoil.presentation, g, _conjugate(trefoil)):
        lam = h.evaluate(trefoil.longitude)
        mu = h.evaluate(trefoil.meridian_word)
        assert g.mult_idx(lam, mu) == g.mult_idx(mu, lam)

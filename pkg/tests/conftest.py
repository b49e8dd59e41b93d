import pytest

from newtonsing import Support, brieskorn
from newtonsing.invariants import SingularityModel

# Brieskorn exponents (a, b, c <= 11) whose links are rational homology spheres
BRIESKORN_RHS = [
    (2, 3, 5),
    (2, 3, 7),
    (2, 3, 8),
    (2, 3, 11),
    (2, 2, 3),
    (2, 4, 5),
    (2, 5, 7),
    (2, 7, 9),
    (3, 4, 5),
    (3, 5, 7),
]

FRONT_PAGE = [(4, 0, 0), (3, 2, 0), (0, 10, 0), (2, 0, 3), (0, 3, 4), (0, 0, 8)]

# found by seeded random search over convenient supports passing the
# isolated / compact-face / rational-homology-sphere predicates
RANDOM_SUPPORTS = [
    [(0, 0, 7), (0, 5, 0), (2, 0, 4), (6, 0, 0)],
    [(0, 0, 4), (0, 7, 0), (1, 4, 0), (1, 4, 4), (4, 0, 0), (5, 1, 2)],
    [(0, 0, 6), (0, 6, 0), (1, 5, 3), (2, 0, 1), (4, 0, 0), (5, 5, 1)],
    [(0, 0, 5), (0, 6, 0), (1, 3, 0), (3, 1, 2), (6, 0, 0)],
    [(0, 0, 7), (0, 1, 1), (0, 3, 0), (2, 2, 1), (4, 5, 4), (7, 0, 0)],
]


def corpus_supports():
    out = [brieskorn(*abc) for abc in BRIESKORN_RHS]
    out.append(Support(FRONT_PAGE))
    out.extend(Support(p) for p in RANDOM_SUPPORTS)
    return out


_MODELS = {}


def model_for(support):
    if support.points not in _MODELS:
        _MODELS[support.points] = SingularityModel(support)
    return _MODELS[support.points]


@pytest.fixture(scope="session")
def corpus():
    return [model_for(s) for s in corpus_supports()]


@pytest.fixture()
def front_page_model():
    return model_for(Support(FRONT_PAGE))


from newtonsing.graph import tree_code  # noqa: F401  (re-export for tests)

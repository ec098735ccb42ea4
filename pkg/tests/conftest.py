from hypothesis import settings
from hypothesis import strategies as st

from paralie.lie_algebra import CatalogEntry, catalog_instantiate

# exact arithmetic makes per-example timing noisy
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(lambda q: q != 0)


def cat(family, **params):
    return catalog_instantiate(CatalogEntry.of(family, **params))

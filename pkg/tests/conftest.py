from __future__ import annotations

from hypothesis import HealthCheck, settings, strategies as st

from steenrod2.poly import Poly, vector_space_ring
from steenrod2.qforms import QuadraticForm

settings.register_profile(
    "repo", max_examples=60, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@st.composite
def polys(draw, nvars: int = 3, max_degree: int = 6, max_terms: int = 5, homogeneous: bool = False):
    """Random polynomials over F2 in degree-1 variables."""
    ring = vector_space_ring(nvars)
    d = draw(st.integers(0, max_degree))
    terms = set()
    for _ in range(draw(st.integers(0, max_terms))):
        deg = d if homogeneous else draw(st.integers(0, max_degree))
        cuts = sorted(draw(st.lists(st.integers(0, deg), min_size=nvars - 1, max_size=nvars - 1)))
        bounds = [0] + cuts + [deg]
        terms ^= {tuple(bounds[i + 1] - bounds[i] for i in range(nvars))}
    return Poly(ring, frozenset(terms))


@st.composite
def forms(draw, n: int = 3):
    return QuadraticForm(n, draw(st.integers(0, (1 << (n * (n + 1) // 2)) - 1)))


@st.composite
def linear_maps(draw, m: int, n: int):
    return tuple(draw(st.integers(0, (1 << m) - 1)) for _ in range(n))

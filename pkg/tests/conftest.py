import sys

import pytest
from hypothesis import settings, strategies as st

from nilcat.field import GF, QQ
from nilcat.linalg import Mat

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

FIELDS = [QQ, GF(7)]


@pytest.fixture(params=FIELDS, ids=["Q", "F7"])
def field(request):
    return request.param


@st.composite
def matrices(draw, rows=None, cols=None, field=QQ, max_dim=4):
    r = draw(st.integers(0, max_dim)) if rows is None else rows
    c = draw(st.integers(0, max_dim)) if cols is None else cols
    vals = draw(st.lists(st.integers(-4, 4), min_size=r * c, max_size=r * c))
    return Mat(r, c, vals, field)


@st.composite
def square_matrices(draw, field=QQ, max_dim=4):
    n = draw(st.integers(1, max_dim))
    return draw(matrices(n, n, field))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS, key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(line)

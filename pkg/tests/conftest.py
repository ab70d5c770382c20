from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from stringhh import fixtures
from stringhh.presentation import parse_presentation

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def presentations(draw, max_vertices=5, max_arrows=6, characteristic=0):
    """Triangular quadratic monomial presentations; vertex i only reaches j > i."""
    nv = draw(st.integers(1, max_vertices))
    pairs = [(i, j) for i in range(1, nv + 1) for j in range(i + 1, nv + 1)]
    arrows = draw(st.lists(st.sampled_from(pairs), max_size=max_arrows)) if pairs else []
    lines = ["vertices: " + " ".join(str(i) for i in range(1, nv + 1))]
    lines += [f"arrow: a{k} {s} {t}" for k, (s, t) in enumerate(arrows)]
    composable = [(f"a{x}", f"a{y}") for x, (_, t) in enumerate(arrows) for y, (s, _) in enumerate(arrows) if t == s]
    rels = draw(st.lists(st.sampled_from(composable), unique=True)) if composable else []
    lines += [f"relation: {a} {b}" for a, b in rels]
    if characteristic:
        lines.append(f"field: F{characteristic}")
    return parse_presentation("\n".join(lines) + "\n")


FIXTURES = {name: fixtures.load(name) for name in fixtures.NAMES}


_CRITERIA: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    number, title = mark.args
    detail = getattr(item, "criterion_detail", "")
    _CRITERIA[number] = (title, "PASS" if call.excinfo is None else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, verdict, detail = _CRITERIA[number]
        line = f"criterion {number} [{verdict}] {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))

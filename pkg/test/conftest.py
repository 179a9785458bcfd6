import json
import os.path
import sys

import pytest

sys.path.insert(0, 'src/')  # noqa


@pytest.fixture(scope="session")
def doc_path():
    return os.path.join(os.path.dirname(os.path.dirname(
        os.path.abspath(__file__))), "doc")


@pytest.fixture(scope="session")
def load_schema(doc_path):
    def load(name):
        with open(os.path.join(doc_path, "%s.schema.json" % name)) as fd:
            return json.load(fd)
    return load


@pytest.fixture(scope="session")
def coarse_grid():
    import subordination

    return subordination.DiskGrid((0.1, 0.3, 0.5, 0.7, 0.9, 0.99), 64)


@pytest.fixture(scope="session")
def harness_grid():
    import subordination

    return subordination.DiskGrid(angles=64)


@pytest.fixture(scope="session")
def default_grid():
    import subordination

    return subordination.default_grid()


@pytest.fixture(scope="session")
def families():
    import analytic

    return {
        "identity": analytic.make_named("identity"),
        "koebe_like": analytic.make_named("koebe_like", beta=0.5),
        "moebius": analytic.make_named("moebius", a=0.5),
        "exp_scaled": analytic.make_named("exp_scaled", alpha=0.3 + 0.2j),
        "poly": analytic.make_named("poly", coeffs=(0, 1, 0.1, -0.05j)),
    }


@pytest.fixture(scope="function")
def stats_obj():
    import stats

    obj = stats.TrialStatistics("t21", 1)
    return obj


@pytest.fixture()
def isolated_home(tmp_path, monkeypatch):
    monkeypatch.setenv("HOME", str(tmp_path))
    return tmp_path

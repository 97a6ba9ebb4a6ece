import os
import sys

import pytest


@pytest.fixture(scope="session")
def eaqc():
    """The bindings: the installed package, or the raw module from a cmake
    build tree pointed at by EAQC_MODULE_DIR."""
    try:
        import eaqc as mod
        return mod
    except ImportError:
        pass
    module_dir = os.environ.get("EAQC_MODULE_DIR")
    if module_dir:
        sys.path.insert(0, module_dir)
    import _eaqc
    return _eaqc


@pytest.fixture(scope="session")
def iris_path():
    here = os.path.dirname(__file__)
    default = os.path.join(here, "..", "..", "data", "iris.csv")
    return os.environ.get("EAQC_DATA_DIR", os.path.dirname(default)) + "/iris.csv"

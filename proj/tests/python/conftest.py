# SPDX-License-Identifier: Apache-2.0
import os
import shutil

import pytest


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("CATSL2_CLI") or shutil.which("catsl2")
    if not path:
        pytest.skip("catsl2 executable not found")
    return path

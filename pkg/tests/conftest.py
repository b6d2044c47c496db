import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest

from afsem.core import Framework


@pytest.fixture
def fw():
    """Build a framework from 'a b c' names and 'a>b b>c' attack text."""

    def build(names, attacks=""):
        pairs = [tuple(item.split(">")) for item in attacks.split()]
        return Framework.of(names.split(), pairs)

    return build

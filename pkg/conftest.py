"""Pytest wiring: parse absl flags so absltest helpers (e.g. create_tempdir) work."""

import sys

from absl import flags


def pytest_configure(config):
    if not flags.FLAGS.is_parsed():
        flags.FLAGS(sys.argv[:1], known_only=True)

"""Deterministic random number streams.

All stochastic components draw from numpy ``Generator`` objects backed by
PCG64.  A given 64-bit seed always produces the same draw sequence,
independent of platform, which is what makes missions and benchmark runs
exactly repeatable.
"""

from __future__ import annotations

import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    """Return a PCG64 generator seeded with ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(seed))


def robot_streams(seed: int, robot_id: int) -> tuple[np.random.Generator, np.random.Generator]:
    """Derive the (optimizer, sensor-noise) stream pair for one robot.

    The derivation is a pure function of ``(seed, robot_id)``, so multi-robot
    runs are reproducible per robot regardless of scheduling order.
    """
    root = np.random.SeedSequence(seed)
    robot_seq = root.spawn(robot_id + 1)[robot_id]
    opt_seq, sensor_seq = robot_seq.spawn(2)
    return np.random.default_rng(opt_seq), np.random.default_rng(sensor_seq)

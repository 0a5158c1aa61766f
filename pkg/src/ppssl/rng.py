"""Counter-based, role-separated random streams.

Every source of randomness in a run is a Philox generator keyed by
``(base_seed, run_index, role)`` through a ``SeedSequence`` spawn key, so
data generation, epoch shuffles, teacher noise, fresh-batch sampling and
Monte-Carlo draws never share or race a stream, and any one of them can be
reproduced in isolation.
"""

import numpy as np

# Stream roles. Values are part of the on-disk reproducibility contract:
# renumbering them changes every generated dataset and trace.
ROLE_DATA = 0
ROLE_SHUFFLE = 1
ROLE_TEACHER = 2
ROLE_BATCH = 3
ROLE_MC = 4
ROLE_INIT = 5
ROLE_EVAL = 6


def stream(base_seed: int, run_index: int, role: int) -> np.random.Generator:
    """Independent generator for one (run, role) pair."""
    ss = np.random.SeedSequence(entropy=int(base_seed), spawn_key=(int(run_index), int(role)))
    return np.random.Generator(np.random.Philox(ss))


def substream(base_seed: int, run_index: int, role: int, shard: int) -> np.random.Generator:
    """Shard of a role stream, for chunked or parallel Monte-Carlo loops."""
    ss = np.random.SeedSequence(
        entropy=int(base_seed), spawn_key=(int(run_index), int(role), int(shard))
    )
    return np.random.Generator(np.random.Philox(ss))

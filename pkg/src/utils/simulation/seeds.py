"""
Sementes derivadas por repetição.

Cada (n, repetição) recebe o fluxo SeedSequence(semente, spawn_key=(n, repetição)),
independente da ordem em que as repetições são executadas.
"""

import numpy as np

from utils.data.points import validate_seed


def trial_seed(base_seed, n, trial):
    """Semente de 64 bits da repetição `trial` com tamanho de amostra `n`."""
    sequence = np.random.SeedSequence(validate_seed(base_seed), spawn_key=(int(n), int(trial)))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])

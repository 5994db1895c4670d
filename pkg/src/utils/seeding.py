"""
Deterministic seeds for HarmoniTree.

Randomized procedures derive their seeds from stable text (tree codes, check names)
so results never depend on process hash randomization or scheduling.
"""

import hashlib
import random


def derive_seed(*parts) -> int:
    """
    Stable 64-bit seed from the text of the given parts.

    Examples:
        >>> derive_seed("3:0,0,1") == derive_seed("3:0,0,1")
        True
    """
    text = "|".join(str(p) for p in parts)
    return int.from_bytes(hashlib.sha256(text.encode('utf-8')).digest()[:8], 'big')


def seeded_rng(*parts) -> random.Random:
    return random.Random(derive_seed(*parts))

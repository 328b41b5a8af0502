"""Structure of the reduced lowering digraph on equivalence classes."""

import numpy as np

from adinkra.heights import (
    from_pegs,
    height_index,
    orbit_size,
    reduced_lowering_edges,
    valise,
    valise_without,
)
from adinkra.hypercube import popcount


WHITES4 = [v for v in range(16) if popcount(v) % 2 == 1]


def white_pegs(exclude=()):
    return {w: 2 for w in WHITES4 if w not in exclude}


# One representative per class of heights on H^4, by pegged vertices
# (vertex bitmask -> value). Primed classes are the inversions of their
# unprimed partners.
PEG_REPS_4 = {
    "fe": {15: 4},
    "v": white_pegs(),
    "1": {14: 3, 13: 3, 11: 3, 7: 3},
    "1p": {15: 4, 0: 2},
    "2": {14: 3, 13: 3, 11: 3},
    "3": {14: 3, 13: 3, 3: 2},
    "4": {14: 3, 13: 3},
    "5": {14: 3, 3: 2, 5: 2, 9: 2},
    "6": white_pegs([1]),
    "6p": {14: 2, 0: 1, 3: 1, 5: 1, 9: 1},
    "7": white_pegs([8, 7]),
    "7p": {8: 2, 7: 2},
    "8": white_pegs([1, 2]),
    "8p": {14: 2, 13: 2, 0: 1, 3: 1},
    "9": white_pegs([8, 11, 7]),
    "9p": {2: 2, 8: 2, 7: 2},
    "10": white_pegs([1, 2, 4]),
    "10p": {14: 2, 13: 2, 11: 2, 0: 1},
    "11": {2: 2, 13: 2, 7: 2, 8: 2},
    "12": {14: 2, 13: 2, 7: 2, 8: 2},
    "13": {14: 2, 13: 2, 11: 2, 8: 2},
    "14": {14: 2, 13: 2, 11: 2, 7: 2, 0: 1},
}

CLASS_SIZES_4 = {
    "fe": 16, "v": 2, "1": 16, "1p": 16, "2": 64, "2p": 64, "3": 96, "3p": 96,
    "4": 48, "5": 64, "6": 16, "6p": 16, "7": 8, "7p": 8, "8": 48, "8p": 48,
    "9": 48, "9p": 48, "10": 64, "10p": 64, "11": 12, "12": 96, "13": 16,
    "14": 16,
}

EDGES_4 = """fe>1 1>2 1p>fe 1p>14 14>10p 14>1 10p>2 10p>8p 10>14 10>12 10>13
12>10p 12>9p 13>10p 2>3 2p>10 2p>1p 8p>6p 8p>3 8>10 8>9 9p>8p 9p>7p 9>12 9>11
3>5 3>4 3p>8 3p>2p 5>3p 5>6 6p>5 6p>v 6>8 6>7 7p>6p 7>9 11>9p v>6 4>3p""".split()


def build_reps_4():
    reps = {name: from_pegs(4, pegs) for name, pegs in PEG_REPS_4.items()}
    reps["2p"] = reps["2"].invert()
    reps["3p"] = reps["3"].invert()
    return reps


def test_reduced_digraph_on_h4():
    reps = build_reps_4()
    labels, edges = reduced_lowering_edges(4)
    lookup = height_index(4)
    sizes = np.bincount(labels)
    name_of = {nm: int(labels[lookup[h.row().tobytes()]]) for nm, h in reps.items()}
    assert len(set(name_of.values())) == 24 == labels.max() + 1
    for nm in reps:
        assert sizes[name_of[nm]] == CLASS_SIZES_4[nm], nm
    expected = {tuple(name_of[x] for x in e.split(">")) for e in EDGES_4}
    assert expected == edges


def test_primed_classes_are_inversions():
    reps = build_reps_4()
    labels, _ = reduced_lowering_edges(4)
    lookup = height_index(4)
    for nm in ("1", "2", "3", "6", "8", "9", "10"):
        inv_label = labels[lookup[reps[nm].invert().row().tobytes()]]
        assert inv_label == labels[lookup[reps[nm + "p"].row().tobytes()]]


def test_h5_poset_spot_class_sizes():
    reps = {
        valise(5): 2,
        valise_without(5, [31]): 32,
        valise_without(5, [31, 28]): 160,  # removed pins at distance 2
        valise_without(5, [31, 16]): 80,  # removed pins at distance 4
        valise_without(5, [31, 28, 26]): 320,  # pairwise distances 2,2,2
        valise_without(5, [31, 28, 7]): 480,  # pairwise distances 2,2,4
        valise_without(5, [31, 28, 1]): 320,  # pairwise distances 2,4,4
    }
    for h, size in reps.items():
        assert orbit_size(h.row(), 5) == size

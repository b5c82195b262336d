"""Shared corpus of groups exercised by the property and acceptance tests."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for bruteforce helpers

from epgraph.groups import build_group

# Every family at desk scale; orders stay <= 128 so the structural-law
# sweeps (edge connectivity, matching bounds) finish quickly.
CORPUS_SPECS = (
    "cyclic:1",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:6",
    "cyclic:8",
    "cyclic:9",
    "cyclic:12",
    "cyclic:15",
    "cyclic:27",
    "cyclic:30",
    "abelian:2,2",
    "abelian:2^2,2",
    "abelian:2^2,2^2",
    "abelian:2^3,2,2",
    "abelian:3,3",
    "abelian:3^2,3",
    "abelian:5,5",
    "abelian:2^2,3",
    "abelian:2,2,3^2",
    "cyclic:16",
    "abelian:2^2,2,2",
    "dihedral:2",
    "dihedral:3",
    "dihedral:4",
    "dihedral:5",
    "dihedral:6",
    "dihedral:8",
    "dihedral:9",
    "dihedral:12",
    "dihedral:16",
    "semidihedral:1",
    "semidihedral:2",
    "semidihedral:3",
    "semidihedral:4",
    "semidihedral:5",
    "u6n:1",
    "u6n:2",
    "u6n:3",
    "u6n:4",
    "u6n:6",
    "u6n:9",
    "genq:2",
    "genq:3",
    "genq:4",
    "genq:6",
    "product:(cyclic:4)x(cyclic:9)",
    "product:(cyclic:8)x(cyclic:3)",
    "product:(genq:2)x(cyclic:9)",
    "product:(abelian:2,2)x(cyclic:3)",
    "product:(cyclic:5)x(cyclic:7)",
    "product:(dihedral:3)x(cyclic:5)",
)

# p-groups of the corpus, tagged with p (used by the p-group laws).
PGROUP_SPECS = (
    ("cyclic:2", 2),
    ("cyclic:4", 2),
    ("cyclic:8", 2),
    ("cyclic:16", 2),
    ("abelian:2,2", 2),
    ("abelian:2^2,2", 2),
    ("abelian:2^2,2^2", 2),
    ("abelian:2^2,2,2", 2),
    ("abelian:2^3,2,2", 2),
    ("dihedral:2", 2),
    ("dihedral:4", 2),
    ("dihedral:8", 2),
    ("dihedral:16", 2),
    ("semidihedral:2", 2),
    ("semidihedral:4", 2),
    ("genq:2", 2),
    ("genq:4", 2),
    ("genq:8", 2),
    ("cyclic:3", 3),
    ("cyclic:9", 3),
    ("cyclic:27", 3),
    ("abelian:3,3", 3),
    ("abelian:3^2,3", 3),
    ("abelian:5,5", 5),
)


@pytest.fixture(scope="session")
def corpus():
    return {spec: build_group(spec) for spec in CORPUS_SPECS}


@pytest.fixture(scope="session")
def pgroup_corpus():
    return [(spec, p, build_group(spec)) for spec, p in PGROUP_SPECS]

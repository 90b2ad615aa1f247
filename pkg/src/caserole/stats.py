"""Cooccurrence counts and the two lexical attraction measures.

Head-head counts feed a context-vector cosine, head-handle counts feed
pointwise mutual information.  Unseen events yield 0 rather than an
undefined value, so downstream code can simply drop zero weights.
"""

from __future__ import annotations

import math
from collections import defaultdict
from pathlib import Path


def _pair_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


class CooccurrenceStore:
    """Immutable lemma cooccurrence counts with precomputed marginals.

    ``hh`` maps unordered lemma pairs to counts (stored once, queried
    either way), ``ha`` maps (lemma, preposition) pairs.
    """

    def __init__(self, hh=None, ha=None):
        self._hh = {}
        for (a, b), count in (hh or {}).items():
            self._add_checked(self._hh, _pair_key(a, b), count)
        self._ha = {}
        for pair, count in (ha or {}).items():
            self._add_checked(self._ha, tuple(pair), count)

        self.hh_total = sum(self._hh.values())
        self.ha_total = sum(self._ha.values())
        self.head_marginal = defaultdict(int)
        self.handle_marginal = defaultdict(int)
        for (head, handle), count in self._ha.items():
            self.head_marginal[head] += count
            self.handle_marginal[handle] += count
        # Context vectors: for each lemma, its cooccurrence counts with
        # every neighbour lemma.
        self._contexts = defaultdict(dict)
        for (a, b), count in self._hh.items():
            self._contexts[a][b] = self._contexts[a].get(b, 0) + count
            if a != b:
                self._contexts[b][a] = self._contexts[b].get(a, 0) + count

    @staticmethod
    def _add_checked(table, key, count):
        count = int(count)
        if count < 0:
            raise ValueError(f"negative count for pair {key}")
        table[key] = table.get(key, 0) + count

    @classmethod
    def empty(cls) -> "CooccurrenceStore":
        return cls()

    def hh_count(self, a: str, b: str) -> int:
        return self._hh.get(_pair_key(a, b), 0)

    def ha_count(self, head: str, handle: str) -> int:
        return self._ha.get((head, handle), 0)

    def mutual_information(self, head: str, handle: str) -> float:
        """log P(head, handle) / (P(head) P(handle)), estimated from the
        head-handle table; 0 whenever any involved count is 0."""
        joint = self.ha_count(head, handle)
        if joint == 0:
            return 0.0
        h = self.head_marginal.get(head, 0)
        a = self.handle_marginal.get(handle, 0)
        if h == 0 or a == 0 or self.ha_total == 0:
            return 0.0
        return math.log((joint * self.ha_total) / (h * a))

    def cosine(self, head_i: str, head_j: str) -> float:
        """Cosine of the two context vectors over cooccurring lemmas;
        0 when either vector is empty."""
        vec_i = self._contexts.get(head_i)
        vec_j = self._contexts.get(head_j)
        if not vec_i or not vec_j:
            return 0.0
        dot = sum(count * vec_j[k] for k, count in vec_i.items() if k in vec_j)
        norm_i = math.sqrt(sum(c * c for c in vec_i.values()))
        norm_j = math.sqrt(sum(c * c for c in vec_j.values()))
        if norm_i == 0.0 or norm_j == 0.0:
            return 0.0
        return dot / (norm_i * norm_j)


def parse_counts(lines, source: str = "<counts>") -> CooccurrenceStore:
    """Parse count lines of the form ``HH lemma lemma count`` or
    ``HA lemma preposition count``; '#' lines are comments."""
    hh = defaultdict(int)
    ha = defaultdict(int)
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) != 4 or fields[0] not in ("HH", "HA"):
            raise ValueError(f"{source}:{number}: malformed count line {line!r}")
        kind, first, second, raw = fields
        try:
            count = int(raw)
        except ValueError:
            raise ValueError(f"{source}:{number}: bad count {raw!r}") from None
        if count < 0:
            raise ValueError(f"{source}:{number}: negative count {count}")
        if kind == "HH":
            hh[_pair_key(first, second)] += count
        else:
            ha[(first, second)] += count
    return CooccurrenceStore(hh=hh, ha=ha)


def load_counts(path) -> CooccurrenceStore:
    path = Path(path)
    with open(path, encoding="utf-8") as handle:
        return parse_counts(handle, source=str(path))

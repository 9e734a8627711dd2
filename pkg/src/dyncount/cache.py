"""Persistent component cache with explicit keys and lazy symmetry canonicalization.

A cache key is always the component's own clause list (never indices into
a global formula), so a key collision implies the two components are the
same formula. In symmetry mode the clause list is first renamed through a
frequency-derived literal permutation, so isomorphic components collide.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .formula import clause_key, lit_key


def frequency_profile(clauses):
    """Per-variable literal pair ordered by increasing clause-occurrence count.

    Returns {var: (first_literal, first_count, second_count)}. On a count
    tie the negative literal comes first.
    """
    counts = {}
    variables = set()
    for c in clauses:
        for l in c:
            counts[l] = counts.get(l, 0) + 1
            variables.add(abs(l))
    profile = {}
    for v in variables:
        pos = counts.get(v, 0)
        neg = counts.get(-v, 0)
        if pos < neg:
            profile[v] = (v, pos, neg)
        else:
            profile[v] = (-v, neg, pos)
    return profile


def sort_profile(profile):
    """Order the pairs by (first count, second count), ties by variable id.

    Returns a list of (variable, first_literal).
    """
    return [(v, profile[v][0])
            for v in sorted(profile, key=lambda v: (profile[v][1], profile[v][2], v))]


def build_renaming(ordered_pairs):
    """Literal permutation from the sorted profile.

    The first literal of the pair at position i maps to the negative
    literal of variable i; complements follow, so the map is stable.
    """
    sigma = {}
    for i, (_, first) in enumerate(ordered_pairs, 1):
        sigma[first] = -i
        sigma[-first] = i
    return sigma


def canonicalize(clauses):
    """Quasi-canonical key: apply the frequency renaming and renormalize.

    Returns (key, sigma). The key's formula has the same model count as
    the input; under frequency-profile ties the form is only
    quasi-canonical, which costs hits but never soundness.
    """
    sigma = build_renaming(sort_profile(frequency_profile(clauses)))
    renamed = {tuple(sorted((sigma[l] for l in c), key=lit_key)) for c in clauses}
    key = tuple(sorted(renamed, key=clause_key))
    return key, sigma


def make_key(clauses, symmetry=False):
    if symmetry:
        return canonicalize(clauses)[0]
    return tuple(sorted(clauses, key=clause_key))


def key_bytes(key):
    # documented size model: per-entry overhead + per-clause + per-literal
    return 32 + 16 * len(key) + 8 * sum(len(c) for c in key)


@dataclass
class CacheEntry:
    count: int
    byte_size: int
    hits: int = 0
    created_seq: int = 0
    last_touched_revision: int = 0


@dataclass
class CacheStats:
    entries: int = 0
    bytes: int = 0
    positive_hits: int = 0
    negative_hits: int = 0
    stores: int = 0
    evictions: int = 0


class ComponentCache:
    """Key -> exact count map with a byte budget and hit/age eviction.

    Lookup relies on dict semantics: hashing narrows, full key equality
    decides, so a hash collision can never return a wrong entry.
    """

    def __init__(self, byte_budget):
        if byte_budget <= 0:
            raise ValueError("cache byte budget must be positive")
        self.byte_budget = byte_budget
        self.entries = {}
        self.bytes_used = 0
        self.revision = 0
        self._seq = 0
        self.stats = CacheStats()

    def clear(self):
        self.entries.clear()
        self.bytes_used = 0

    def lookup(self, key):
        """Return the stored count or None; updates hit statistics either way."""
        entry = self.entries.get(key)
        if entry is None:
            self.stats.negative_hits += 1
            return None
        entry.hits += 1
        entry.last_touched_revision = self.revision
        self.stats.positive_hits += 1
        return entry.count

    def store(self, key, count):
        if key in self.entries:
            return
        size = key_bytes(key)
        if size > self.byte_budget:
            return  # a key that cannot fit is simply not cached
        self._seq += 1
        self.entries[key] = CacheEntry(count, size, 0, self._seq, self.revision)
        self.bytes_used += size
        self.stats.stores += 1
        if self.bytes_used > self.byte_budget:
            self.evict()

    def evict(self):
        """Drop lowest hits/age entries until usage is at most 0.8 * budget."""
        target = int(self.byte_budget * 0.8)

        def score(item):
            entry = item[1]
            age = max(1, self.revision - entry.last_touched_revision + 1)
            return (entry.hits / age, entry.created_seq)

        for key, entry in sorted(self.entries.items(), key=score):
            if self.bytes_used <= target:
                break
            del self.entries[key]
            self.bytes_used -= entry.byte_size
            self.stats.evictions += 1

    def snapshot_stats(self):
        self.stats.entries = len(self.entries)
        self.stats.bytes = self.bytes_used
        return self.stats

import math
import random
from collections import Counter
from itertools import permutations

import pytest

from interarr.labeling import (count_chains_with_word, dump_chain_line,
                               el_label, enumerate_filtered_chains,
                               filtered_descent_counts, label_set,
                               min_atom_label, r_label, verify_el,
                               verify_r_labeling)
from interarr.lattice import NotComparableError
from interarr.signed_partitions import (NotACoverError, SignedPartition,
                                        enumerate_lattice, variant_b)
from interarr.arrangement import intersection_lattice, make_family


def test_r_label_examples():
    x = SignedPartition.bottom(2)
    merged12 = SignedPartition.from_blocks(2, [(0,), (1, 2), (-1, -2)])
    signed1 = SignedPartition.from_blocks(2, [(-1, 0, 1), (2,), (-2,)])
    assert r_label(x, merged12) == 2
    assert r_label(x, signed1) == 1
    x3 = SignedPartition.bottom(3)
    signed3 = SignedPartition.from_blocks(3, [(-3, 0, 3), (1,), (-1,), (2,), (-2,)])
    assert r_label(x3, signed3) == 3
    with pytest.raises(NotACoverError):
        r_label(x, SignedPartition.top(2))


def test_el_label_figure_edges():
    bottom = SignedPartition.bottom(3)
    coh = SignedPartition.from_blocks(3, [(0,), (2, 3), (-2, -3), (1,), (-1,)])
    noncoh = SignedPartition.from_blocks(3, [(0,), (2, -3), (-2, 3), (1,), (-1,)])
    assert el_label(bottom, coh) == (0, 3)
    assert el_label(bottom, noncoh) == (2, 2)
    coatom = SignedPartition.from_blocks(3, [(-1, 0, 1, 2, -2), (3,), (-3,)])
    assert el_label(coatom, SignedPartition.top(3)) == (1, 1)


def test_label_set_examples(pi_b):
    lat = pi_b[3]
    bottom, top = lat.elements[lat.bottom], lat.elements[lat.top]
    assert label_set(bottom, bottom) == frozenset()
    assert label_set(bottom, top) == frozenset({1, 2, 3})
    with pytest.raises(NotComparableError):
        x = SignedPartition.from_blocks(3, [(0,), (1, 2), (-1, -2), (3,), (-3,)])
        y = SignedPartition.from_blocks(3, [(0,), (1, 3), (-1, -3), (2,), (-2,)])
        label_set(y, x)


def test_label_set_matches_chain_labels_random_intervals(pi_b):
    lat = pi_b[4]
    rng = random.Random(9)
    masks = lat._ensure_down_masks()
    tried = 0
    while tried < 100:
        lo = rng.randrange(len(lat))
        hi = rng.randrange(len(lat))
        if lo == hi or not (masks[hi] >> lo & 1):
            continue
        tried += 1
        expected = label_set(lat.elements[lo], lat.elements[hi])
        chain = next(lat.maximal_chains(lo, hi))
        got = {r_label(lat.elements[chain[k]], lat.elements[chain[k + 1]])
               for k in range(len(chain) - 1)}
        assert got == expected


def _inv(sigma):
    k = len(sigma)
    return [sum(1 for j in range(i, k) if sigma[j] <= sigma[i]) for i in range(k)]


def test_chain_count_formula_small(pi_b):
    lat = pi_b[2]
    assert count_chains_with_word(lat, lat.bottom, lat.top, (1, 2)) == 1
    assert count_chains_with_word(lat, lat.bottom, lat.top, (2, 1)) == 3
    lat3 = pi_b[3]
    total = 0
    for sigma in permutations(range(1, 4)):
        cnt = count_chains_with_word(lat3, lat3.bottom, lat3.top, sigma)
        assert cnt == math.prod(2 * a - 1 for a in _inv(sigma))
        total += cnt
    assert total == 36


def test_chain_count_formula_on_upper_intervals(pi_b):
    # the product formula counts chains into the top element; on proper
    # intervals only the identity word (the unique increasing chain) obeys
    # it, because merges with in-set labels can leave the interval
    for n in (2, 3):
        lat = pi_b[n]
        for lo in range(len(lat)):
            if lo == lat.top:
                continue
            k = lat.rank[lat.top] - lat.rank[lo]
            for sigma in permutations(range(1, k + 1)):
                cnt = count_chains_with_word(lat, lo, lat.top, sigma)
                assert cnt == math.prod(2 * a - 1 for a in _inv(sigma))


def test_unique_increasing_chain_on_proper_intervals(pi_b):
    lat = pi_b[3]
    rng = random.Random(4)
    masks = lat._ensure_down_masks()
    checked = 0
    while checked < 60:
        lo, hi = rng.randrange(len(lat)), rng.randrange(len(lat))
        if lo == hi or not (masks[hi] >> lo & 1):
            continue
        checked += 1
        k = lat.rank[hi] - lat.rank[lo]
        identity = tuple(range(1, k + 1))
        assert count_chains_with_word(lat, lo, hi, identity) == 1


def test_unique_increasing_chain_is_identity_word(pi_b):
    lat = pi_b[3]
    assert count_chains_with_word(lat, lat.bottom, lat.top, (1, 2, 3)) == 1


def test_filtered_chains_pi2(pi_b):
    lat = pi_b[2]
    chains = list(enumerate_filtered_chains(lat, el_label))
    assert len(chains) == 1
    assert chains[0].word == ((0, 2), (1, 1))
    assert chains[0].descent_count == 0


def test_filtered_chain_counts_match_dfs(pi_b, dns_lattices):
    for lat in [pi_b[2], pi_b[3], pi_b[4], dns_lattices[(4, 1)], dns_lattices[(3, 0)]]:
        dfs = Counter(c.descent_count for c in enumerate_filtered_chains(lat, el_label))
        assert dict(dfs) == filtered_descent_counts(lat, el_label)


def test_rank1_lattice_single_chain():
    lat = enumerate_lattice(variant_b(1))
    chains = list(enumerate_filtered_chains(lat, el_label))
    assert len(chains) == 1 and chains[0].descent_count == 0


def test_verify_el_pi_and_dns(pi_b, dns_lattices):
    for n in (2, 3):
        assert verify_el(pi_b[n], el_label) == []
    for s in range(4):
        assert verify_el(dns_lattices[(3, s)], el_label) == []


def test_verify_el_negative_control(pi_b):
    def corrupted(x, y):
        lab = el_label(x, y)
        return (2, 9) if lab == (1, 1) else lab

    assert verify_el(pi_b[2], corrupted) != []


def test_verify_r_labeling(pi_b):
    for n in (2, 3, 4):
        assert verify_r_labeling(pi_b[n], r_label) == []


def test_label_set_equals_every_chain_label_set(pi_b):
    lat = pi_b[3]
    for lo in range(len(lat)):
        for hi in lat.up_set(lo):
            if hi == lo:
                continue
            expected = label_set(lat.elements[lo], lat.elements[hi])
            for chain in lat.maximal_chains(lo, hi):
                got = {r_label(lat.elements[chain[k]], lat.elements[chain[k + 1]])
                       for k in range(len(chain) - 1)}
                assert got == expected


def test_el_restriction_law(pi_b, dns_lattices):
    # the increasing chain of any ambient interval stays inside the subposet
    for n in (2, 3, 4):
        ambient = pi_b[n]
        amb_id = {ambient.elements[i]: i for i in range(len(ambient))}
        labels = {}
        for s in range(n):
            sub = dns_lattices[(n, s)]
            members = set(sub.elements)
            for lo_s in range(len(sub)):
                for hi_s in sub.up_set(lo_s):
                    if hi_s == lo_s:
                        continue
                    lo, hi = amb_id[sub.elements[lo_s]], amb_id[sub.elements[hi_s]]
                    found = None
                    for chain in ambient.maximal_chains(lo, hi):
                        word = [el_label(ambient.elements[chain[k]],
                                         ambient.elements[chain[k + 1]])
                                for k in range(len(chain) - 1)]
                        if all(word[k] < word[k + 1] for k in range(len(word) - 1)):
                            found = chain
                            break
                    assert found is not None
                    assert all(ambient.elements[v] in members for v in found)


def test_descent_preservation_across_s(pi_b, dns_lattices):
    # chains through the new elements at step u and step s carry descents at
    # identical positions, as multisets
    for n in (2, 3, 4):
        profiles = {}
        for s in range(1, n + 1):
            lat = dns_lattices[(n, s)]
            marker = tuple(sorted((-s, 0, s)))
            profile = Counter()
            for chain in lat.maximal_chains(lat.bottom, lat.top):
                if not any(lat.elements[v].zero_block == marker for v in chain):
                    continue
                word = [el_label(lat.elements[chain[k]], lat.elements[chain[k + 1]])
                        for k in range(len(chain) - 1)]
                descents = tuple(k + 1 for k in range(len(word) - 1)
                                 if word[k] >= word[k + 1])
                profile[descents] += 1
            profiles[s] = profile
        assert len(set(map(frozenset, (p.items() for p in profiles.values())))) == 1


def test_min_atom_label_is_el_on_arrangement_lattices():
    for fam, n in [("b", 2), ("a", 2), ("a", 3), ("d", 3)]:
        lat = intersection_lattice(make_family(fam, n))
        assert verify_el(lat, min_atom_label(lat)) == [], (fam, n)


def test_dump_chain_line(pi_b):
    chain = next(iter(enumerate_filtered_chains(pi_b[2], el_label)))
    assert dump_chain_line(chain) == "(0,2),(1,1) ; des=0"

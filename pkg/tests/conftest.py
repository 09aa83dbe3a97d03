"""Shared constructions: named groups and descriptor-building helpers."""

from __future__ import annotations

import json
import os

import pytest

from chisign import tables
from chisign.core import CartanType, FieldSignature, GlobalDescriptor, Place
from chisign.permgrp import PermGroup, Permutation

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


def load_group(name: str) -> PermGroup:
    with open(data_path(name), "r", encoding="utf-8") as handle:
        return PermGroup.from_json(json.load(handle))


def symmetric_group(n: int) -> PermGroup:
    transposition = Permutation.from_cycles(n, [(0, 1)])
    cycle = Permutation.from_cycles(n, [tuple(range(n))])
    return PermGroup(n, [transposition, cycle])


def cyclic_witness_group() -> PermGroup:
    """Cyclic group on 36 points generated by a {6,6,6,3,3,3,3,3,3} element."""
    cycles = [tuple(range(6 * i, 6 * i + 6)) for i in range(3)]
    cycles += [tuple(range(18 + 3 * i, 18 + 3 * i + 3)) for i in range(6)]
    return PermGroup(36, [Permutation.from_cycles(36, cycles)])


def s6wr2_group() -> PermGroup:
    """S6 wr C2 in product action on 36 = 6 x 6 points; order 1,036,800."""
    degree = 36
    cyc, tr, sw = [0] * degree, [0] * degree, [0] * degree
    for i in range(6):
        for j in range(6):
            cyc[6 * i + j] = 6 * ((i + 1) % 6) + j
            ti = 1 if i == 0 else 0 if i == 1 else i
            tr[6 * i + j] = 6 * ti + j
            sw[6 * i + j] = 6 * j + i
    return PermGroup(degree, [Permutation(cyc), Permutation(tr), Permutation(sw)])


def make_descriptor(type_name, real_forms=(), finite_forms=(), complex_places=0,
                    l_sig=None):
    """Build a validated descriptor from (behavior, label) selections.

    real_forms: list of labels, or (l_behavior, label) pairs for outer types,
    or (l_behavior, label, d4_count) triples for triality types.
    finite_forms: list of (prime, l_behavior, label) or
    (prime, l_behavior, label, d4_count).
    """
    ct = CartanType.parse(type_name)
    entries = []
    for item in real_forms:
        if isinstance(item, str):
            behavior, label, count = "not_applicable", item, None
        elif len(item) == 2:
            (behavior, label), count = item, None
        else:
            behavior, label, count = item
        place = Place("real", None, behavior, count)
        entries.append((place, tables.resolve_record(ct, place, label)))
    for item in finite_forms:
        if len(item) == 3:
            (prime, behavior, label), count = item, None
        else:
            prime, behavior, label, count = item
        place = Place("finite", prime, behavior, count)
        entries.append((place, tables.resolve_record(ct, place, label)))
    for _ in range(complex_places):
        behavior = "not_applicable" if ct.twist == 1 else "split"
        count = None if ct.twist == 1 else (3 if ct.twist == 3 else 6)
        entries.append((Place("complex", None, behavior, count), None))
    k_sig = FieldSignature(len(list(real_forms)), complex_places)
    return GlobalDescriptor(cartan=ct, k_sig=k_sig, places_in_S=tuple(entries), l_sig=l_sig)


def brute_force_closure(degree, image_tuples):
    """Dumb tuple-based closure, independent of the kernel implementations."""
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for p in frontier:
            for g in image_tuples:
                q = tuple(g[i] for i in p)
                if q not in seen:
                    seen.add(q)
                    fresh.append(q)
        frontier = fresh
    return seen


@pytest.fixture
def psl27():
    return load_group("psl27.json")


@pytest.fixture
def psl27_subgroups(psl27):
    from chisign.permgrp import Subgroup

    with open(data_path("psl27_stab.json")) as handle:
        stab = Subgroup.from_json(psl27, json.load(handle))
    with open(data_path("psl27_twisted.json")) as handle:
        twisted = Subgroup.from_json(psl27, json.load(handle))
    return stab, twisted

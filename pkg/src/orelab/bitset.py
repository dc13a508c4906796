"""Subsets of ``range(n)`` stored as Python ints."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def contains(mask: int, i: int) -> bool:
    return (mask >> i) & 1 == 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0

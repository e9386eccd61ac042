"""sparse6 encoding and decoding for simple undirected graphs.

Implements the published sparse6 format byte for byte: a ':' prefix, the
6-bit big-endian size field N(n), then a stream of (b, x) pairs where b is
one bit and x is a k-bit vertex index, k being the width of n-1.  Padding
uses 1-bits, with the power-of-two corner case padded by a single 0 first
so the tail cannot decode as an extra edge.
"""

from __future__ import annotations


class Sparse6Error(ValueError):
    pass


def _size_bits(n: int) -> int:
    k = max(1, (n - 1).bit_length())
    return k


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise Sparse6Error("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes(
            [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
        )
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise Sparse6Error("vertex count out of sparse6 range")


def _decode_size(data: bytes, pos: int):
    if pos >= len(data):
        raise Sparse6Error("truncated size field")
    c = data[pos]
    if c != 126:
        return c - 63, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        chunk = data[pos + 2 : pos + 8]
        if len(chunk) != 6:
            raise Sparse6Error("truncated size field")
        n = 0
        for byte in chunk:
            n = (n << 6) | (byte - 63)
        return n, pos + 8
    chunk = data[pos + 1 : pos + 4]
    if len(chunk) != 3:
        raise Sparse6Error("truncated size field")
    n = 0
    for byte in chunk:
        n = (n << 6) | (byte - 63)
    return n, pos + 4


def encode(n: int, edges) -> bytes:
    """sparse6 line (without newline) for a graph on n vertices."""
    if n < 1:
        raise Sparse6Error("sparse6 encoder requires at least one vertex")
    k = _size_bits(n)
    bits = []

    def push(value, width):
        for shift in range(width - 1, -1, -1):
            bits.append((value >> shift) & 1)

    ordered = sorted((max(u, v), min(u, v)) for u, v in edges)
    current = 0
    for v, u in ordered:
        if v >= n or u < 0:
            raise Sparse6Error("edge endpoint out of range")
        if v == current:
            push(0, 1)
            push(u, k)
        elif v == current + 1:
            current = v
            push(1, 1)
            push(u, k)
        else:
            current = v
            push(1, 1)
            push(v, k)
            push(0, 1)
            push(u, k)
    pad = (-len(bits)) % 6
    if k < 6 and n == (1 << k) and pad >= k and current < n - 1:
        push(0, 1)
        pad = (-len(bits)) % 6
    bits.extend([1] * pad)

    out = bytearray(b":")
    out += _encode_size(n)
    for i in range(0, len(bits), 6):
        value = 0
        for bit in bits[i : i + 6]:
            value = (value << 1) | bit
        out.append(value + 63)
    return bytes(out)


def decode(data) -> tuple:
    """(n, sorted edge list) from one sparse6 line.

    Accepts an optional >>sparse6<< header and a trailing newline.
    """
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>sparse6<<"):
        data = data[len(b">>sparse6<<") :]
    if not data.startswith(b":"):
        raise Sparse6Error("missing ':' sparse6 header")
    for byte in data[1:]:
        if byte < 63 or byte > 126:
            raise Sparse6Error("byte out of sparse6 alphabet: %d" % byte)
    n, pos = _decode_size(data, 1)
    if n < 0:
        raise Sparse6Error("negative vertex count")
    k = _size_bits(max(n, 1))

    bits = []
    for byte in data[pos:]:
        value = byte - 63
        for shift in (5, 4, 3, 2, 1, 0):
            bits.append((value >> shift) & 1)

    edges = []
    v = 0
    i = 0
    while i + k < len(bits):
        if bits[i]:
            v += 1
        x = 0
        for bit in bits[i + 1 : i + 1 + k]:
            x = (x << 1) | bit
        i += 1 + k
        if v >= n or x >= n:
            break
        if x > v:
            v = x
        else:
            if x == v:
                raise Sparse6Error("loop in sparse6 stream (not a simple graph)")
            edges.append((x, v))
    dedup = sorted(set(edges))
    if len(dedup) != len(edges):
        raise Sparse6Error("duplicate edge in sparse6 stream")
    return n, dedup

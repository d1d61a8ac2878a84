"""Pure Python/numpy twin of the compiled ``_dpcore`` kernel.

Same signature and same residue arithmetic; used when the extension is not
built or when ``WEYLWALK_PURE=1`` is set.
"""
import numpy as np


def chamber_walk_residues(steps, start, n, shape, mask, prime):
    steps = np.asarray(steps, dtype=np.int64)
    start = np.asarray(start, dtype=np.int64)
    shape = tuple(int(x) for x in shape)
    k = len(shape)
    prime = np.uint64(prime)
    if int(prime) >= 1 << 62:
        raise ValueError("prime must be below 2**62")
    mask = np.asarray(mask, dtype=bool).reshape(shape)
    for j in range(k):
        if start[j] - n - 1 < 0 or start[j] + n + 1 >= shape[j]:
            raise ValueError("box too small for the requested walk length")

    cur = np.zeros(shape, dtype=np.uint64)
    origin = tuple(int(x) for x in start)
    if mask[origin]:
        cur[origin] = np.uint64(1) % prime
    for t in range(n):
        # targets of layer t lie within start +- (t + 1)
        target = tuple(slice(int(c) - t - 1, int(c) + t + 2) for c in start)
        nxt = np.zeros(shape, dtype=np.uint64)
        acc = nxt[target]
        for s in steps:
            src = tuple(slice(sl.start - int(d), sl.stop - int(d)) for sl, d in zip(target, s))
            acc += cur[src]
            np.subtract(acc, prime, out=acc, where=acc >= prime)
        acc *= mask[target]
        cur = nxt
    return cur

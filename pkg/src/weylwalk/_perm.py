from typing import Iterator


def signed_permutations(k: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Permutations of range(k) in Steinhaus-Johnson-Trotter order with signs.

    Consecutive permutations differ by one adjacent transposition, so the sign
    simply alternates.
    """
    perm = list(range(k))
    direction = [-1] * k  # indexed by value
    sign = 1
    yield tuple(perm), sign
    while True:
        mobile = -1
        for i, val in enumerate(perm):
            nb = i + direction[val]
            if 0 <= nb < k and perm[nb] < val and (mobile < 0 or val > perm[mobile]):
                mobile = i
        if mobile < 0:
            return
        val = perm[mobile]
        nb = mobile + direction[val]
        perm[mobile], perm[nb] = perm[nb], perm[mobile]
        for x in range(val + 1, k):
            direction[x] = -direction[x]
        sign = -sign
        yield tuple(perm), sign

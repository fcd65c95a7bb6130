"""Independent brute-force oracles used by the test suite."""
from itertools import permutations


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def count_partitions(n, k):
    return sum(1 for p in set_partitions(range(n)) if len(p) == k)


def cycle_count(perm):
    seen, cycles = set(), 0
    for start in range(len(perm)):
        if start in seen:
            continue
        cycles += 1
        j = start
        while j not in seen:
            seen.add(j)
            j = perm[j]
    return cycles


def signed_cycle_number(n, k):
    """(-1)^(n-k) times the number of permutations of n with k cycles."""
    count = sum(1 for p in permutations(range(n)) if cycle_count(p) == k)
    return (-1) ** (n - k) * count


def scalar_s2_lambda(n, k, lam):
    """S_{2,λ}(n,k) at a rational λ, by the scalar recurrence."""
    rows = [[1]]
    for m in range(n):
        prev = rows[-1] + [0]
        rows.append([(prev[j - 1] if j else 0) + (j - m * lam) * prev[j] for j in range(m + 2)])
    return rows[n][k] if k <= n else 0


def scalar_s1_lambda(n, k, lam):
    rows = [[1]]
    for m in range(n):
        prev = rows[-1] + [0]
        rows.append([(prev[j - 1] if j else 0) + (j * lam - m) * prev[j] for j in range(m + 2)])
    return rows[n][k] if k <= n else 0

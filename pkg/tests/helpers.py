import itertools

from rectcomp.enumerate import iter_contained


def compositions_of(n):
    """All compositions of n, via subsets of the n-1 gaps."""
    if n == 0:
        yield ()
        return
    for cuts in itertools.product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def small_generators(limit, decreasing):
    """Every composition (or partition) whose ideal has at most ``limit`` elements.

    Ideals grow under appending a part, so the search prunes on size.
    """
    out = []

    def size(g):
        return sum(1 for _ in itertools.islice(iter_contained(g, decreasing), limit + 1))

    def rec(g):
        out.append(g)
        cap = g[-1] if (decreasing and g) else limit
        for v in range(1, cap + 1):
            h = g + (v,)
            if size(h) <= limit:
                rec(h)
            else:
                # a larger last part only makes the ideal bigger
                break

    rec(())
    return out

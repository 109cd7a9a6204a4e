"""Shared test utilities: random instances and independent bounded oracles."""

from conjsep.words import Word, reduced_words


def random_reduced_word(rng, rank, length):
    """Uniform-ish reduced word of exactly ``length`` letters."""
    codes = []
    for _ in range(length):
        choices = [c for c in range(2 * rank) if not codes or c != codes[-1] ^ 1]
        codes.append(rng.choice(choices))
    return Word(codes)


def random_gens(rng, rank, max_gens, max_len):
    count = rng.randint(1, max_gens)
    return [random_reduced_word(rng, rank, rng.randint(1, max_len)) for _ in range(count)]


def random_subgroup_product(rng, gens, max_factors):
    """A word known to lie in <gens>: a random product of them and inverses."""
    word = Word()
    for _ in range(rng.randint(1, max_factors)):
        g = rng.choice(gens)
        word = word * (g.inverse() if rng.random() < 0.5 else g)
    return word


def cover_end(table, state, word):
    """End state of tracing ``word`` in the covering space.

    States are (vertex, tail): a vertex of the finite graph plus the reduced
    label of a hanging-tree excursion.
    """
    v, tail = state
    tail = list(tail)
    for c in word.letters:
        if tail:
            if c == tail[-1] ^ 1:
                tail.pop()
            else:
                tail.append(c)
        else:
            u = table[v][c]
            if u >= 0:
                v = u
            else:
                tail.append(c)
    return (v, tuple(tail))


def bounded_conjugator_search(h1_gens, h2, bound):
    """Exhaustive search for a conjugator of length <= bound, or None.

    Equivalent to trying every reduced word g with |g| <= bound and testing
    membership of every conjugated generator: the verdict for g depends only
    on the covering-space vertex reached by g^-1, so candidates are walked as
    cover states and deduplicated.  Tail excursions deeper than half the
    shortest generator cannot host a loop of every generator, and only tails
    matching subwords of the common generator prefix can, so those are the
    only ones explored; reachability at each depth is unchanged.
    """
    gens = [w for w in h1_gens if w]
    if not gens:
        return Word()
    table = h2.table

    common = gens[0].letters
    for w in gens[1:]:
        n = 0
        while n < len(common) and n < len(w.letters) and common[n] == w.letters[n]:
            n += 1
        common = common[:n]
    max_tail = min(len(w) for w in gens) // 2
    common = common[:max_tail]
    allowed_tails = {()}
    for i in range(len(common)):
        for j in range(i, len(common)):
            seg = common[i : j + 1]
            allowed_tails.add(tuple(c ^ 1 for c in reversed(seg)))

    def loops_everywhere(state):
        return all(cover_end(table, state, w) == state for w in gens)

    start = (0, ())
    seen = {start}
    frontier = [(start, ())]
    if loops_everywhere(start):
        return Word()
    for _ in range(bound):
        nxt = []
        for (v, tail), path in frontier:
            for c in range(len(table[0])):
                if tail:
                    if c == tail[-1] ^ 1:
                        new = (v, tail[:-1])
                    else:
                        new_tail = tail + (c,)
                        if new_tail not in allowed_tails:
                            continue
                        new = (v, new_tail)
                else:
                    u = table[v][c]
                    if u >= 0:
                        new = (u, tail)
                    else:
                        if (c,) not in allowed_tails:
                            continue
                        new = (v, (c,))
                if new in seen:
                    continue
                seen.add(new)
                new_path = path + (c,)
                if loops_everywhere(new):
                    # path spells g^-1, read from the base
                    return Word(tuple(x ^ 1 for x in reversed(new_path)))
                nxt.append((new, new_path))
        frontier = nxt
    return None


def naive_conjugator_search(h1_gens, h2, bound):
    """Literal enumeration of all reduced conjugator candidates, length-lex."""
    gens = [w for w in h1_gens if w]
    if not gens:
        return Word()
    for g in reduced_words(h2.rank, bound):
        if all(h2.contains(w.conjugate(g)) for w in gens):
            return g
    return None


def conjugator_bound(h1_gens, h2):
    """Length bound for the bounded search: prefix + graph size + longest generator."""
    gens = [w for w in h1_gens if w]
    if not gens:
        return 0
    _, prefix = gens[0].cyclic_reduce()
    return len(prefix) + h2.vertex_count + max(len(w) for w in gens)

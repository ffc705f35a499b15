import random

from hypothesis import strategies as st

from pcgraph.graph import Digraph


@st.composite
def digraphs(draw, min_size=0, max_size=5, prefix=""):
    n = draw(st.integers(min_size, max_size))
    names = [f"{prefix}{i}" for i in range(n)]
    pairs = [(a, b) for a in names for b in names if a != b]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(names, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def dags(draw, max_size=7):
    n = draw(st.integers(0, max_size))
    names = [f"d{i}" for i in range(n)]
    pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(names, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def triples(draw, max_v1=5, max_v2=3, min_v2=0):
    g1 = draw(digraphs(max_size=max_v1))
    g2 = draw(digraphs(min_size=min_v2, max_size=max_v2, prefix="w"))
    mask = draw(st.lists(st.booleans(), min_size=len(g1), max_size=len(g1)))
    vp = frozenset(v for v, keep in zip(g1.sorted_vertices(), mask) if keep)
    return g1, vp, g2


def random_class_source(rng: random.Random, max_classes: int = 6) -> str:
    """Random valid program: acyclic extends, mixed generic flags, shuffled order."""
    n = rng.randint(1, max_classes)
    names = [f"K{i}" for i in range(n)]
    generic = {name: rng.random() < 0.5 for name in names}
    lines = []
    for i, name in enumerate(names):
        text = f"class {name}" + ("<T>" if generic[name] else "")
        sup = rng.choice([None, "Object"] + names[:i])
        if sup is not None:
            text += f" extends {sup}"
            if generic.get(sup) and rng.random() < 0.7:
                choices = ["Object"] + [m for m in names if not generic[m]]
                if generic[name]:
                    choices.append("T")
                text += f"<{rng.choice(choices)}>"
        lines.append(text + " {}")
    rng.shuffle(lines)
    return "\n".join(lines) + "\n"

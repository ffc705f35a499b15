"""Independent brute-force oracles. Nothing here calls into pcgraph's algorithms."""
from itertools import permutations


def brute_isomorphic(g, h):
    """Try every bijection; only for tiny graphs."""
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return False
    gv = list(g.vertices)
    target = set(h.edges)
    for perm in permutations(list(h.vertices)):
        m = dict(zip(gv, perm))
        if {(m[s], m[t]) for s, t in g.edges} == target:
            return True
    return False


def closure(vertices, edges):
    """Strict reachability pairs via Warshall's algorithm."""
    vs = list(vertices)
    reach = {(s, t) for s, t in edges}
    for k in vs:
        for i in vs:
            if (i, k) not in reach:
                continue
            for j in vs:
                if (k, j) in reach:
                    reach.add((i, j))
    return reach


def cartesian_by_rule(g1, g2):
    """Cartesian product by testing the adjacency rule on every vertex pair."""
    verts = [(u, v) for u in g1.vertices for v in g2.vertices]
    edges = set()
    for (u1, v1) in verts:
        for (u2, v2) in verts:
            if (u1 == u2 and (v1, v2) in g2.edges) or (v1 == v2 and (u1, u2) in g1.edges):
                edges.add(((u1, v1), (u2, v2)))
    return set(verts), edges


def pcgp_cases(edge, g1, vp, g2):
    """Which of the four construction cases can produce ``edge``."""
    s, t = edge
    vn = g1.vertices - vp
    hits = []
    if isinstance(s, tuple) and isinstance(t, tuple) and s[0] in vp and t[0] in vp:
        (u1, v1), (u2, v2) = s, t
        if (u1 == u2 and (v1, v2) in g2.edges) or (v1 == v2 and (u1, u2) in g1.edges):
            hits.append("pp")
    if isinstance(s, tuple) and t in vn and s[0] in vp and (s[0], t) in g1.edges and s[1] in g2.vertices:
        hits.append("pn")
    if s in vn and isinstance(t, tuple) and t[0] in vp and (s, t[0]) in g1.edges and t[1] in g2.vertices:
        hits.append("np")
    if s in vn and t in vn and (s, t) in g1.edges:
        hits.append("nn")
    return hits

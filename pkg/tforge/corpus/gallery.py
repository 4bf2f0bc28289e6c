"""Hand-transcribed example graphs.

Every builder numbers edges in listing order starting at 0, so marked edges
are listed last where an entry needs a fixed id for them.
"""

from tforge.graph.models import EdgeId, Multigraph
from tforge.iso.mapping import VertexMapping

WHITNEY_CUT = (1, 5)
WHITNEY_SIDE = (6, 7, 8)


def whitney_g() -> Multigraph:
    return Multigraph.from_edges(
        [
            (1, 2), (2, 3), (3, 4), (4, 5), (5, 7), (7, 8), (8, 6),
            (6, 1), (1, 8), (6, 5), (5, 2), (1, 3), (5, 7),
        ],
        name="whitney-G",
    )


def whitney_g_prime() -> Multigraph:
    return Multigraph.from_edges(
        [
            (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 8), (8, 7),
            (7, 1), (1, 6), (8, 5), (5, 2), (1, 3), (1, 7),
        ],
        name="whitney-G'",
    )


def gray_g() -> tuple[Multigraph, EdgeId]:
    """G* with its marked edge e = 1-2 (edge id 9)."""
    g = Multigraph.from_edges(
        [(2, 3), (3, 4), (4, 1), (1, 5), (5, 6), (6, 2), (2, 5), (5, 4), (5, 6), (1, 2)],
        name="G*",
    )
    return g, 9


def gray_h() -> tuple[Multigraph, EdgeId]:
    """H* with its marked edge f = 1-3 (edge id 9)."""
    h = Multigraph.from_edges(
        [(4, 3), (3, 2), (2, 6), (6, 5), (5, 4), (4, 1), (1, 5), (5, 2), (5, 1), (1, 3)],
        name="H*",
    )
    return h, 9


# Two isomorphisms G0/e -> H0/f for the P5 seed with phi the identity.
PSI_CHOICE_1 = VertexMapping.from_dict({1: 4, 2: 1, 3: 2, 5: 3})
PSI_CHOICE_2 = VertexMapping.from_dict({1: 3, 2: 2, 3: 1, 5: 4})

DPSI_ARCS = ((1, 4), (2, 1), (2, 5), (3, 2), (4, 2), (5, 3))
DPSI_CYCLES = [(1, 4, 2), (2, 5, 3)]
SEED_S = (3, 4)
SEED_T = (1, 5)


def w0_centred() -> Multigraph:
    """W0 with a centre vertex 1; w-list (7, 2, 3, 4, 5, 6), x-list (9, 10, 8)."""
    return Multigraph.from_edges(
        [
            (1, 3), (3, 4), (4, 5), (5, 1), (1, 7), (7, 6), (6, 5), (5, 10), (7, 2),
            (2, 3), (3, 9), (7, 8), (8, 2), (2, 9), (9, 4), (4, 10), (10, 6), (6, 8),
        ],
        name="W0-a",
    )


def w0_doubled() -> Multigraph:
    """W0 without a centre, with x_i doubled to one w-vertex each."""
    return Multigraph.from_edges(
        [
            (3, 4), (4, 5), (7, 6), (6, 5), (5, 10), (7, 2), (2, 3), (3, 9), (7, 8),
            (8, 2), (2, 9), (9, 4), (4, 10), (10, 6), (6, 8), (7, 8), (3, 9), (5, 10),
        ],
        name="W0-b",
    )


W0_W_LIST = (7, 2, 3, 4, 5, 6)
W0_X_LIST = (9, 10, 8)
W0_R = 3
W0_G = 2


def cycle_graph(k: int, name: str = "") -> Multigraph:
    return Multigraph.from_edges([(i, i % k + 1) for i in range(1, k + 1)], name=name or f"C{k}")


def complete_graph(n: int) -> Multigraph:
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return Multigraph.from_edges(pairs, vertices=range(1, n + 1), name=f"K{n}")


def chiral_rotor(k: int = 6) -> Multigraph:
    """C_k on 1..k plus p_i = k+i joined once to u_i and twice to u_{i+1}.

    The rotation is an automorphism; no reflection is.
    """
    pairs = [(i, i % k + 1) for i in range(1, k + 1)]
    for i in range(1, k + 1):
        p = k + i
        pairs += [(p, i), (p, i % k + 1), (p, i % k + 1)]
    return Multigraph.from_edges(pairs, name=f"chiral-C{k}")

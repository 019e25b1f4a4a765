import random
from itertools import permutations

import pytest

from johnson_p2c import (
    ElementSet,
    EndpointQuad,
    JohnsonGraph,
    P2CSolution,
    Relabeling,
    apply_relabeling,
    check_p2c,
    complement,
    k_subsets,
    p2c_complete,
    p2c_johnson,
)
from johnson_p2c.errors import BadQuad, OutOfTheoremRange, TooFewVertices
from johnson_p2c.hamilton import Path


def es(elems, n):
    return ElementSet.from_elements(elems, n)


def quad(n, *pairs):
    return EndpointQuad(*(es(p, n) for p in pairs))


# All essentially distinct covers of J(4,2), used verbatim as test vectors.
J42_VECTORS = [
    # (u, v, x, y, path_uv, path_xy)
    ([1, 2], [1, 3], [2, 3], [2, 4],
     [[1, 2], [1, 4], [1, 3]], [[2, 3], [3, 4], [2, 4]]),
    ([1, 2], [2, 4], [1, 3], [2, 3],
     [[1, 2], [1, 4], [2, 4]], [[1, 3], [3, 4], [2, 3]]),
    ([1, 2], [2, 3], [1, 3], [2, 4],
     [[1, 2], [2, 3]], [[1, 3], [1, 4], [3, 4], [2, 4]]),
    ([1, 2], [1, 3], [2, 4], [3, 4],
     [[1, 2], [1, 4], [1, 3]], [[2, 4], [2, 3], [3, 4]]),
    ([1, 2], [2, 4], [1, 3], [3, 4],
     [[1, 2], [2, 3], [2, 4]], [[1, 3], [1, 4], [3, 4]]),
    ([1, 2], [3, 4], [1, 3], [2, 4],
     [[1, 2], [2, 3], [3, 4]], [[1, 3], [1, 4], [2, 4]]),
]


class TestP2CComplete:
    def test_k4(self):
        verts = list(k_subsets(4, 1))
        sol = p2c_complete(verts, quad(4, [1], [2], [3], [4]))
        assert sol.path_uv.vertices == (es([1], 4), es([2], 4))
        assert sol.path_xy.vertices == (es([3], 4), es([4], 4))

    def test_k5(self):
        verts = list(k_subsets(5, 1))
        sol = p2c_complete(verts, quad(5, [1], [2], [3], [5]))
        assert sol.path_uv.vertices == (es([1], 5), es([2], 5))
        assert sol.path_xy.vertices == (es([3], 5), es([4], 5), es([5], 5))

    def test_k6(self):
        verts = list(k_subsets(6, 1))
        sol = p2c_complete(verts, quad(6, [1], [6], [2], [5]))
        assert sol.path_uv.vertices == (es([1], 6), es([6], 6))
        assert sol.path_xy.vertices == tuple(es([e], 6) for e in (2, 3, 4, 5))

    def test_exhaustive_k4_to_k8(self):
        for n in range(4, 9):
            g = JohnsonGraph(n, 1)
            verts = list(g.vertices())
            for four in permutations(verts, 4):
                q = EndpointQuad(*four)
                assert check_p2c(g, q, p2c_complete(verts, q)).valid

    def test_too_few(self):
        with pytest.raises(TooFewVertices):
            p2c_complete(list(k_subsets(3, 1)), quad(3, [1], [2], [3], [3]))

    def test_bad_quad(self):
        verts = list(k_subsets(4, 1))
        with pytest.raises(BadQuad):
            p2c_complete(verts, quad(4, [1], [1], [2], [3]))


class TestJ42Vectors:
    def test_table_rows_valid(self):
        g = JohnsonGraph(4, 2)
        for u, v, x, y, puv, pxy in J42_VECTORS:
            q = quad(4, u, v, x, y)
            sol = P2CSolution(
                Path(tuple(es(w, 4) for w in puv)),
                Path(tuple(es(w, 4) for w in pxy)),
            )
            assert check_p2c(g, q, sol).valid

    def test_constructor_covers_each_row_quad(self):
        g = JohnsonGraph(4, 2)
        for u, v, x, y, _, _ in J42_VECTORS:
            q = quad(4, u, v, x, y)
            assert check_p2c(g, q, p2c_johnson(g, q)).valid


class TestP2CJohnson:
    def test_j63_cover(self):
        g = JohnsonGraph(6, 3)
        q = quad(6, [1, 2, 3], [4, 5, 6], [1, 2, 4], [3, 5, 6])
        sol = p2c_johnson(g, q)
        assert check_p2c(g, q, sol).valid
        assert len(sol.path_uv) + len(sol.path_xy) == 20

    def test_j51_delegates_to_complete(self):
        g = JohnsonGraph(5, 1)
        q = quad(5, [1], [2], [3], [5])
        sol = p2c_johnson(g, q)
        assert sol.path_uv.vertices == (es([1], 5), es([2], 5))

    def test_orientation(self):
        g = JohnsonGraph(6, 3)
        q = quad(6, [2, 3, 5], [1, 2, 3], [4, 5, 6], [1, 4, 6])
        sol = p2c_johnson(g, q)
        assert sol.path_uv[0] == q.u and sol.path_uv[-1] == q.v
        assert sol.path_xy[0] == q.x and sol.path_xy[-1] == q.y

    @pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (5, 3), (6, 2), (6, 4)])
    def test_exhaustive(self, n, k):
        g = JohnsonGraph(n, k)
        verts = list(g.vertices())
        for four in permutations(verts, 4):
            q = EndpointQuad(*four)
            assert check_p2c(g, q, p2c_johnson(g, q)).valid

    def test_out_of_range(self):
        with pytest.raises(OutOfTheoremRange):
            p2c_johnson(JohnsonGraph(3, 1), quad(3, [1], [2], [3], [1]))
        with pytest.raises(OutOfTheoremRange):
            p2c_johnson(
                JohnsonGraph(4, 4),
                quad(4, [1, 2, 3, 4], [1, 2, 3, 4], [1, 2, 3, 4], [1, 2, 3, 4]),
            )

    def test_bad_quad_duplicate(self):
        g = JohnsonGraph(5, 2)
        with pytest.raises(BadQuad):
            p2c_johnson(g, quad(5, [1, 2], [1, 2], [2, 3], [3, 4]))

    def test_deterministic(self):
        g = JohnsonGraph(7, 3)
        q = quad(7, [1, 2, 3], [4, 5, 7], [2, 4, 6], [1, 5, 6])
        a = p2c_johnson(g, q)
        b = p2c_johnson(g, q)
        assert a.path_uv.vertices == b.path_uv.vertices
        assert a.path_xy.vertices == b.path_xy.vertices


class TestEquivariance:
    def test_relabeling(self):
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randint(4, 7)
            k = rng.randint(1, n - 1)
            g = JohnsonGraph(n, k)
            verts = list(g.vertices())
            if len(verts) < 4:
                continue
            u, v, x, y = rng.sample(verts, 4)
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            r = Relabeling(perm)
            q = EndpointQuad(u, v, x, y)
            qi = EndpointQuad(*(apply_relabeling(r, w) for w in (u, v, x, y)))
            sol = p2c_johnson(g, qi)
            pulled = P2CSolution(
                Path(tuple(apply_relabeling(r.inverse(), w) for w in sol.path_uv)),
                Path(tuple(apply_relabeling(r.inverse(), w) for w in sol.path_xy)),
            )
            assert check_p2c(g, q, pulled).valid

    def test_complement(self):
        rng = random.Random(11)
        for _ in range(100):
            n = rng.randint(4, 7)
            k = rng.randint(1, n - 1)
            g = JohnsonGraph(n, k)
            verts = list(g.vertices())
            if len(verts) < 4:
                continue
            u, v, x, y = rng.sample(verts, 4)
            q = EndpointQuad(u, v, x, y)
            sol = p2c_johnson(g, q)
            gc = JohnsonGraph(n, n - k)
            qc = EndpointQuad(*(complement(w) for w in (u, v, x, y)))
            mapped = P2CSolution(
                Path(tuple(complement(w) for w in sol.path_uv)),
                Path(tuple(complement(w) for w in sol.path_xy)),
            )
            assert check_p2c(gc, qc, mapped).valid

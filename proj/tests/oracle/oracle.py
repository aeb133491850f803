"""Independent sympy oracle used to freeze expected values for the C++ tests.

Conventions: a linear map is a matrix acting on column vectors; a bilinear
form is stored as M[i][j] = f(e_i, e_j) and its flat map is M^T.
"""
import itertools
import sympy as sp

I = sp.I


def lie_from(n, table):
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (i, j), vec in table.items():
        for k, v in vec.items():
            c[i - 1][j - 1][k - 1] += v
            c[j - 1][i - 1][k - 1] -= v
    return c


def prelie_from(n, table):
    p = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (i, j), vec in table.items():
        for k, v in vec.items():
            p[i - 1][j - 1][k - 1] += v
    return p


def ad(c):
    n = len(c)
    return [sp.Matrix(n, n, lambda k, j: c[i][j][k]) for i in range(n)]


def left(p):
    n = len(p)
    return [sp.Matrix(n, n, lambda k, j: p[i][j][k]) for i in range(n)]


def dual(mats):
    return [-m.T for m in mats]


def subadj(p):
    n = len(p)
    return [[[p[i][j][k] - p[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]


def form(n, terms):
    M = sp.zeros(n, n)
    for kind, i, j, v in terms:
        M[i - 1, j - 1] += v
        if kind == "w":
            M[j - 1, i - 1] -= v
    return M


def flat(M):
    return M.T


def bracket_vec(c, x, y):
    n = len(c)
    return sp.Matrix([sum(x[i] * y[j] * c[i][j][k] for i in range(n) for j in range(n)) for k in range(n)])


def rho_of(rep, x):
    return sum((x[i] * rep[i] for i in range(len(rep))), sp.zeros(*rep[0].shape))


def is_rdo(c, rep, d):
    n = len(c)
    E = sp.eye(n)
    for i in range(n):
        for j in range(n):
            x, y = E[:, i], E[:, j]
            lhs = d * bracket_vec(c, x, y)
            rhs = rho_of(rep, x) * d * y - rho_of(rep, y) * d * x
            if sp.simplify(lhs - rhs) != sp.zeros(*lhs.shape):
                return False
    return True


def classify(c, rep, ds):
    Ts = [d.inv() for d in ds]
    n = ds[0].shape[1]
    eps = []
    Ns = []
    for i in range(3):
        N = Ts[(i - 1) % 3] * ds[(i + 1) % 3]
        N2 = sp.simplify(N * N)
        if N2 == sp.eye(n):
            eps.append(1)
        elif N2 == -sp.eye(n):
            eps.append(-1)
        else:
            eps.append(None)
        Ns.append(N)
    return eps, Ns, [is_rdo(c, rep, d) for d in ds]


def main():
    # lie.L4sym
    c = lie_from(4, {(1, 2): {2: 1}, (1, 3): {3: -1}, (1, 4): {4: 1}})
    co = dual(ad(c))
    w1 = form(4, [("w", 1, 2, 1), ("w", 1, 3, 1), ("w", 3, 4, 1)])
    w2 = form(4, [("w", 1, 4, 1), ("w", 2, 3, 1)])
    w3 = form(4, [("w", 1, 2, -1), ("w", 1, 3, 1), ("w", 3, 4, 1)])
    ds = [flat(w) for w in (w1, w2, w3)]
    eps, Ns, rdo = classify(c, co, ds)
    print("L4sym eps", eps, "rdo", rdo)
    T = [d.inv() for d in ds]
    h = eps[2] * eps[1] * ds[2] * T[0] * ds[1]
    print("L4sym hflat", h.tolist())
    print("L4sym N1", Ns[0].tolist())
    print("L4sym N2", Ns[1].tolist())
    print("L4sym N3", Ns[2].tolist())
    print("L4sym inv(w1flat)", T[0].tolist())

    # prelie.rot4
    p = prelie_from(4, {(3, 1): {2: 1}, (3, 2): {1: -1}})
    cc = subadj(p)
    coreg = dual(left(p))
    B1 = form(4, [("t", 1, 1, 1), ("t", 2, 2, 1), ("t", 3, 3, 2), ("t", 3, 4, 1), ("t", 4, 3, 1)])
    B2 = form(4, [("t", 1, 1, -1), ("t", 2, 2, -1), ("t", 3, 3, 2), ("t", 4, 4, 1), ("t", 3, 4, 1), ("t", 4, 3, 1)])
    B3 = form(4, [("t", 1, 1, I), ("t", 2, 2, I), ("t", 3, 3, 2 * I), ("t", 4, 4, I), ("t", 3, 4, I), ("t", 4, 3, I)])
    ds = [flat(B) for B in (B1, B2, B3)]
    eps, Ns, rdo = classify(cc, coreg, ds)
    print("rot4 eps", eps, "rdo", rdo)
    print("rot4 dets", [B.det() for B in (B1, B2, B3)])
    T = [d.inv() for d in ds]
    h = eps[2] * eps[1] * ds[2] * T[0] * ds[1]
    print("rot4 hflat", h.tolist())

    # B4 hessian generic determinant by brute force
    pB = prelie_from(4, {(1, 2): {4: 1}, (2, 1): {4: 1}, (2, 3): {1: 2}, (3, 2): {1: 1},
                         (4, 2): {2: -1}, (4, 3): {3: 1}, (4, 4): {4: -1}})
    for name, pp in (("B4", pB),
                     ("I4", prelie_from(4, {(1, 1): {1: 2}, (1, 2): {2: 1}, (1, 3): {3: 1}, (1, 4): {4: 1},
                                            (2, 2): {1: 1}, (3, 3): {1: 1}, (4, 4): {1: 1}})),
                     ("A4", prelie_from(4, {(1, 1): {1: 2}, (1, 2): {2: 1}, (1, 3): {3: 1}, (1, 4): {4: 1},
                                            (2, 4): {1: 1}, (3, 3): {1: 1}, (4, 2): {1: 1}}))):
        syms = sp.symbols("b0:10")
        M = sp.zeros(4, 4)
        idx = 0
        for i in range(4):
            for j in range(i, 4):
                M[i, j] = syms[idx]
                M[j, i] = syms[idx]
                idx += 1
        eqs = []
        n = 4
        E = sp.eye(4)

        def prod(x, y):
            return sp.Matrix([sum(x[a] * y[b] * pp[a][b][k] for a in range(n) for b in range(n)) for k in range(n)])

        def B(x, y):
            return (x.T * M * y)[0, 0]
        for a, b, cidx in itertools.product(range(4), repeat=3):
            x, y, z = E[:, a], E[:, b], E[:, cidx]
            eqs.append(sp.expand(B(prod(x, y), z) - B(x, prod(y, z)) - B(prod(y, x), z) + B(y, prod(x, z))))
        sol = sp.solve(eqs, syms, dict=True)
        Ms = M.subs(sol[0])
        print(name, "hessian space free symbols", sorted(map(str, Ms.free_symbols)), "det", sp.factor(Ms.det()))

    # pre-Lie check of e1.e1=e2, e2.e1=e1
    pbad = prelie_from(2, {(1, 1): {2: 1}, (2, 1): {1: 1}})
    viol = []
    for a, b, cidx in itertools.product(range(2), repeat=3):
        def pr(x, y):
            return [sum(x[i] * y[j] * pbad[i][j][k] for i in range(2) for j in range(2)) for k in range(2)]
        E2 = [[1, 0], [0, 1]]
        x, y, z = E2[a], E2[b], E2[cidx]
        lhs = [u - v for u, v in zip(pr(pr(x, y), z), pr(x, pr(y, z)))]
        rhs = [u - v for u, v in zip(pr(pr(y, x), z), pr(y, pr(x, z)))]
        if lhs != rhs:
            viol.append((a + 1, b + 1, cidx + 1))
    print("bad prelie violations", viol)

    # symplectic space on L4sym
    syms = sp.symbols("w0:6")
    M = sp.zeros(4, 4)
    idx = 0
    for i in range(4):
        for j in range(i + 1, 4):
            M[i, j] = syms[idx]
            M[j, i] = -syms[idx]
            idx += 1
    E = sp.eye(4)
    eqs = []
    for a, b, cidx in itertools.product(range(4), repeat=3):
        x, y, z = E[:, a], E[:, b], E[:, cidx]
        f = lambda u, v: (u.T * M * v)[0, 0]
        eqs.append(sp.expand(f(bracket_vec(c, x, y), z) + f(bracket_vec(c, z, x), y) + f(bracket_vec(c, y, z), x)))
    sol = sp.solve(eqs, syms, dict=True)
    print("L4sym symplectic space", M.subs(sol[0]).tolist(), "det", sp.factor(M.subs(sol[0]).det()))


if __name__ == "__main__":
    main()


def field_values():
    A = sp.Matrix([[1, I, 2], [0, sp.Rational(1, 2), -1], [3, 0, 1 + I]])
    print("A det", sp.simplify(A.det()))
    print("A inv", [[sp.nsimplify(sp.simplify(x)) for x in row] for row in A.inv().tolist()])
    K = sp.Matrix([[1, 2, 3, 4], [2, 4, 6, 8], [1, 0, 1, 0]])
    print("K rank", K.rank(), "nullspace", [list(v) for v in K.nullspace()])
    print("scalar (3/4-2i)*(1+i)", sp.expand((sp.Rational(3, 4) - 2 * I) * (1 + I)))
    print("scalar 1/(1+2i)", sp.simplify(1 / (1 + 2 * I)).expand())


if __name__ == "__main__":
    field_values()


def invariant_values():
    c = lie_from(6, {(1, 2): {3: 1}, (1, 6): {5: -1}, (2, 6): {4: 1}})
    syms = sp.symbols("b0:21")
    M = sp.zeros(6, 6)
    idx = 0
    for i in range(6):
        for j in range(i, 6):
            M[i, j] = M[j, i] = syms[idx]
            idx += 1
    E = sp.eye(6)
    f = lambda u, v: (u.T * M * v)[0, 0]
    eqs = [sp.expand(f(bracket_vec(c, E[:, a], E[:, b]), E[:, d]) + f(E[:, b], bracket_vec(c, E[:, a], E[:, d])))
           for a, b, d in itertools.product(range(6), repeat=3)]
    sol = sp.solve(eqs, syms, dict=True)[0]
    G = M.subs(sol)
    print("tstar ad-invariant space dim", len(G.free_symbols), "det", sp.factor(G.det()))


if __name__ == "__main__":
    invariant_values()

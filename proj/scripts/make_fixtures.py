#!/usr/bin/env python3
"""Generate the in-repo qubit Hamiltonian fixtures (H2 and H4, STO-3G).

Pipeline: analytic STO-3G integrals for s-type Gaussians -> RHF ->
MO-basis spin-orbital integrals (interleaved spins, even = alpha) ->
Jordan-Wigner -> key/value Hamiltonian text file.

Conventions baked into the output (and cross-checked below against an
occupation-number-basis oracle):
  * qubit q <-> spin-orbital q, occupied = |1>, qubit 0 = least
    significant bit of the statevector index
  * a_p^dag = Z_0 ... Z_{p-1} (X_p - i Y_p)/2
  * Pauli labels are written with the leftmost letter on qubit 0

Run from the repository root:  python3 scripts/make_fixtures.py
"""

import math

import numpy as np
from scipy.special import erf

ANGSTROM_TO_BOHR = 1.8897259886

# STO-3G hydrogen 1s (exponents already zeta-scaled), EMSL values.
H_EXP = np.array([3.42525091, 0.62391373, 0.16885540])
H_COEF = np.array([0.15432897, 0.53532814, 0.44463454])


def boys0(t):
    if t < 1e-12:
        return 1.0 - t / 3.0
    return 0.5 * math.sqrt(math.pi / t) * erf(math.sqrt(t))


def prim_norm(a):
    return (2.0 * a / math.pi) ** 0.75


def overlap_prim(a, ra, b, rb):
    p = a + b
    ab2 = float(np.dot(ra - rb, ra - rb))
    return (math.pi / p) ** 1.5 * math.exp(-a * b / p * ab2)


def kinetic_prim(a, ra, b, rb):
    p = a + b
    ab2 = float(np.dot(ra - rb, ra - rb))
    return a * b / p * (3.0 - 2.0 * a * b / p * ab2) * overlap_prim(a, ra, b, rb)


def nuclear_prim(a, ra, b, rb, rc, zc):
    p = a + b
    ab2 = float(np.dot(ra - rb, ra - rb))
    rp = (a * ra + b * rb) / p
    pc2 = float(np.dot(rp - rc, rp - rc))
    return -2.0 * math.pi / p * zc * math.exp(-a * b / p * ab2) * boys0(p * pc2)


def eri_prim(a, ra, b, rb, c, rc, d, rd):
    p = a + b
    q = c + d
    ab2 = float(np.dot(ra - rb, ra - rb))
    cd2 = float(np.dot(rc - rd, rc - rd))
    rp = (a * ra + b * rb) / p
    rq = (c * rc + d * rd) / q
    pq2 = float(np.dot(rp - rq, rp - rq))
    pref = 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))
    return pref * math.exp(-a * b / p * ab2 - c * d / q * cd2) * boys0(p * q / (p + q) * pq2)


def sto3g_integrals(centers, charges):
    """Contracted AO integrals for one s-shell per center."""
    n = len(centers)
    exps, coefs = [], []
    for _ in range(n):
        exps.append(H_EXP)
        coefs.append(H_COEF * prim_norm(H_EXP[0]) * 0)  # placeholder, set below
    # contraction coefficients folded with primitive norms
    coefs = [H_COEF * np.array([prim_norm(a) for a in H_EXP]) for _ in range(n)]

    S = np.zeros((n, n))
    T = np.zeros((n, n))
    V = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            for ia, a in enumerate(exps[i]):
                for jb, b in enumerate(exps[j]):
                    w = coefs[i][ia] * coefs[j][jb]
                    S[i, j] += w * overlap_prim(a, centers[i], b, centers[j])
                    T[i, j] += w * kinetic_prim(a, centers[i], b, centers[j])
                    for rc, zc in zip(centers, charges):
                        V[i, j] += w * nuclear_prim(a, centers[i], b, centers[j], rc, zc)

    eri = np.zeros((n, n, n, n))  # chemists' notation (ij|kl)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    acc = 0.0
                    for ia, a in enumerate(exps[i]):
                        for jb, b in enumerate(exps[j]):
                            for kc, c in enumerate(exps[k]):
                                for ld, d in enumerate(exps[l]):
                                    w = coefs[i][ia] * coefs[j][jb] * coefs[k][kc] * coefs[l][ld]
                                    acc += w * eri_prim(a, centers[i], b, centers[j],
                                                        c, centers[k], d, centers[l])
                    eri[i, j, k, l] = acc
    return S, T + V, eri


def rhf(S, hcore, eri, n_elec, max_iter=200, tol=1e-12):
    n = S.shape[0]
    nocc = n_elec // 2
    sval, svec = np.linalg.eigh(S)
    X = svec @ np.diag(sval ** -0.5) @ svec.T
    D = np.zeros((n, n))
    E_old = 0.0
    F = hcore.copy()
    for it in range(max_iter):
        Fp = X.T @ F @ X
        eps, Cp = np.linalg.eigh(Fp)
        C = X @ Cp
        Cocc = C[:, :nocc]
        D_new = 2.0 * Cocc @ Cocc.T
        D = 0.5 * (D + D_new) if it > 0 else D_new
        J = np.einsum("ls,mnsl->mn", D, eri)
        K = np.einsum("ls,mlsn->mn", D, eri)
        F = hcore + J - 0.5 * K
        E = 0.5 * np.sum(D * (hcore + F))
        if abs(E - E_old) < tol and it > 2:
            break
        E_old = E
    else:
        raise RuntimeError("SCF did not converge")
    return E, C, eps


# --- minimal Pauli algebra on (x, z) bitmask pairs ----------------------

def pauli_mul(x1, z1, x2, z2):
    """Product phase exponent k (i^k) and masks of P1 * P2."""
    k = (bin(x1 & z1).count("1") + bin(x2 & z2).count("1")
         + 2 * bin(z1 & x2).count("1")
         - bin((x1 ^ x2) & (z1 ^ z2)).count("1")) % 4
    return k, x1 ^ x2, z1 ^ z2


def psum_mul(a, b):
    out = {}
    for (x1, z1), c1 in a.items():
        for (x2, z2), c2 in b.items():
            k, x, z = pauli_mul(x1, z1, x2, z2)
            out[(x, z)] = out.get((x, z), 0j) + c1 * c2 * (1j) ** k
    return {key: c for key, c in out.items() if abs(c) > 1e-14}


def psum_add(a, b, scale=1.0):
    out = dict(a)
    for key, c in b.items():
        out[key] = out.get(key, 0j) + scale * c
    return {key: c for key, c in out.items() if abs(c) > 1e-14}


def ladder(p, dagger, n):
    """JW image of a_p (or a_p^dag): Z chain on 0..p-1, (X -+ iY)/2 on p."""
    chain = 0
    for q in range(p):
        chain |= 1 << q
    sign = -1j if dagger else 1j
    return {
        (1 << p, chain): 0.5,          # X_p * Z-chain
        (1 << p, chain | (1 << p)): sign * 0.5,  # Y_p * Z-chain
    }


PAULI_1Q = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),
    (1, 1): np.array([[0, -1j], [1j, 0]], dtype=complex),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=complex),
}


def psum_dense(terms, n):
    dim = 1 << n
    out = np.zeros((dim, dim), dtype=complex)
    for (x, z), c in terms.items():
        m = np.eye(1, dtype=complex)
        for q in range(n):  # qubit 0 = least significant -> kron from the left
            m = np.kron(PAULI_1Q[((x >> q) & 1, (z >> q) & 1)], m)
        out += c * m
    return out


def ladder_dense_oracle(p, dagger, n):
    """a_p (or a_p^dag) in the occupation basis with parity signs."""
    dim = 1 << n
    out = np.zeros((dim, dim), dtype=complex)
    for b in range(dim):
        occ = (b >> p) & 1
        if dagger and occ == 0:
            sign = (-1) ** bin(b & ((1 << p) - 1)).count("1")
            out[b | (1 << p), b] = sign
        if not dagger and occ == 1:
            sign = (-1) ** bin(b & ((1 << p) - 1)).count("1")
            out[b ^ (1 << p), b] = sign
    return out


def check_jw_conventions():
    n = 4
    for p in range(n):
        for dag in (False, True):
            dense = psum_dense(ladder(p, dag, n), n)
            oracle = ladder_dense_oracle(p, dag, n)
            assert np.max(np.abs(dense - oracle)) < 1e-12, (p, dag)
    print("JW ladder operators match the occupation-basis oracle (n=4)")

    # single excitation generator i(a_2^dag a_0 - a_0^dag a_2), n=4
    tau = psum_add(psum_mul(ladder(2, True, n), ladder(0, False, n)),
                   psum_mul(ladder(0, True, n), ladder(2, False, n)), -1.0)
    gen = {k: 1j * c for k, c in tau.items()}
    print("single (0->2), n=4:", sorted((label(k, n), c.real) for k, c in gen.items()))

    # double excitation generator i(a_2^dag a_3^dag a_1 a_0 - h.c.), n=4
    A = psum_mul(psum_mul(ladder(2, True, n), ladder(3, True, n)),
                 psum_mul(ladder(1, False, n), ladder(0, False, n)))
    Ad = psum_mul(psum_mul(ladder(0, True, n), ladder(1, True, n)),
                  psum_mul(ladder(3, False, n), ladder(2, False, n)))
    tau2 = psum_add(A, Ad, -1.0)
    gen2 = {k: 1j * c for k, c in tau2.items()}
    mags = sorted(abs(c) for c in gen2.values())
    print("double (0,1)->(2,3), n=4: %d strings, |coeff| in %s"
          % (len(gen2), sorted(set(round(m, 12) for m in mags))))
    for k, c in sorted(gen2.items()):
        assert abs(c.imag) < 1e-14
    return gen, gen2


def label(key, n):
    x, z = key
    letters = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
    return "".join(letters[((x >> q) & 1, (z >> q) & 1)] for q in range(n))


def qubit_hamiltonian(h_so, eri_phys, n_so):
    """H = sum h_PQ a+P aQ + 1/2 sum <PQ|RS> a+P a+Q aS aR, JW-mapped."""
    H = {}
    for P in range(n_so):
        for Q in range(n_so):
            if abs(h_so[P, Q]) < 1e-14:
                continue
            H = psum_add(H, psum_mul(ladder(P, True, n_so), ladder(Q, False, n_so)),
                         h_so[P, Q])
    for P in range(n_so):
        for Q in range(n_so):
            for R in range(n_so):
                for S in range(n_so):
                    g = eri_phys[P, Q, R, S]
                    if abs(g) < 1e-14:
                        continue
                    t = psum_mul(psum_mul(ladder(P, True, n_so), ladder(Q, True, n_so)),
                                 psum_mul(ladder(S, False, n_so), ladder(R, False, n_so)))
                    H = psum_add(H, t, 0.5 * g)
    return H


def build_molecule(name, centers_angstrom, n_elec):
    centers = [np.array(c, dtype=float) * ANGSTROM_TO_BOHR for c in centers_angstrom]
    charges = [1.0] * len(centers)
    e_nuc = 0.0
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            e_nuc += charges[i] * charges[j] / np.linalg.norm(centers[i] - centers[j])

    S, hcore, eri = sto3g_integrals(centers, charges)
    E_scf, C, eps = rhf(S, hcore, eri, n_elec)
    print("%s: E_SCF(elec) = %.12f, E_nuc = %.12f, total = %.12f"
          % (name, E_scf, e_nuc, E_scf + e_nuc))
    print("  orbital energies:", np.array2string(eps, precision=6))

    h_mo = C.T @ hcore @ C
    eri_mo = np.einsum("mp,nq,ls,ok,mnlo->pqsk", C, C, C, C, eri)  # (pq|rs) chemists
    n_orb = h_mo.shape[0]
    n_so = 2 * n_orb

    h_so = np.zeros((n_so, n_so))
    for P in range(n_so):
        for Q in range(n_so):
            if P % 2 == Q % 2:
                h_so[P, Q] = h_mo[P // 2, Q // 2]
    eri_phys = np.zeros((n_so, n_so, n_so, n_so))
    for P in range(n_so):
        for Q in range(n_so):
            for R in range(n_so):
                for S_ in range(n_so):
                    if P % 2 == R % 2 and Q % 2 == S_ % 2:
                        eri_phys[P, Q, R, S_] = eri_mo[P // 2, R // 2, Q // 2, S_ // 2]

    H = qubit_hamiltonian(h_so, eri_phys, n_so)
    for key, c in H.items():
        assert abs(c.imag) < 1e-12, "non-real qubit coefficient"
    H = {k: c.real for k, c in H.items()}

    dense = psum_dense({k: complex(c) for k, c in H.items()}, n_so).real
    evals, evecs = np.linalg.eigh(dense)
    e_fci_elec = evals[0]
    # particle-number sector check: global minimum must sit in the n_elec sector
    occ_counts = np.array([bin(b).count("1") for b in range(1 << n_so)])
    sector = occ_counts == n_elec
    idx = np.where(sector)[0]
    sector_min = np.linalg.eigvalsh(dense[np.ix_(idx, idx)])[0]
    assert abs(sector_min - e_fci_elec) < 1e-9, (sector_min, e_fci_elec)

    hf_index = (1 << n_elec) - 1
    e_hf_elec = dense[hf_index, hf_index]
    assert abs(e_hf_elec - E_scf) < 1e-9, (e_hf_elec, E_scf)
    print("  HF determinant energy matches SCF: %.12f" % (e_hf_elec + e_nuc))
    print("  E_FCI(total) = %.12f  (correlation %.6f)"
          % (e_fci_elec + e_nuc, e_fci_elec - E_scf))

    return {
        "label": name,
        "n_qubits": n_so,
        "n_electrons": n_elec,
        "nuclear_repulsion": e_nuc,
        "e_hf": e_hf_elec + e_nuc,
        "e_fci": e_fci_elec + e_nuc,
        "terms": H,
    }


def write_fixture(mol, path, comment):
    lines = ["# " + comment,
             "# generated by scripts/make_fixtures.py (STO-3G integrals, RHF, Jordan-Wigner)",
             "n_qubits %d" % mol["n_qubits"],
             "n_electrons %d" % mol["n_electrons"],
             "label %s" % mol["label"],
             "nuclear_repulsion %r" % float(mol["nuclear_repulsion"]),
             "e_hf %r" % float(mol["e_hf"]),
             "e_fci %r" % float(mol["e_fci"])]
    for (x, z) in sorted(mol["terms"].keys()):
        c = mol["terms"][(x, z)]
        lines.append("term %r %s" % (float(c), label((x, z), mol["n_qubits"])))
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")
    print("wrote %s (%d terms)" % (path, len(mol["terms"])))


def main():
    np.set_printoptions(linewidth=200)
    check_jw_conventions()

    r_h2 = 0.74
    h2 = build_molecule("h2_sto3g_0p74",
                        [(0.0, 0.0, 0.0), (0.0, 0.0, r_h2)], 2)
    write_fixture(h2, "fixtures/h2_sto3g_0p74.ham",
                  "H2, STO-3G, R = 0.74 A")

    r_h4 = 0.90
    h4 = build_molecule("h4_chain_0p90",
                        [(0.0, 0.0, i * r_h4) for i in range(4)], 4)
    write_fixture(h4, "fixtures/h4_chain_0p90.ham",
                  "H4 linear chain, STO-3G, R = 0.90 A spacing")


if __name__ == "__main__":
    main()

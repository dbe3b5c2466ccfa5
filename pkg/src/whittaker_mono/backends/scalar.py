"""Scalar Gauss hypergeometric evaluation on the cut plane.

Written in an njit-compatible subset of Python: the numba backend wraps
these functions with @njit, the numpy backend calls them as-is (and
vectorizes the hot real-axis path separately).

Evaluation strategy by region (z in C \\ [1, inf); zmax = 0.75, pushed
to 0.99 per-pack when the connection at 1 is near-degenerate, i.e.
c-a-b resp. b-a lies close to an integer without being snapped):
  |z| <= zmax1           direct series
  |1 - z| <= 1 - zmax1   connection series at 1 (log case when c-a-b is
                         an integer)
  |z/(z-1)| <= zmax2     Pfaff transform, series in w = z/(z-1)
  |1/(1-z)| <= 1 - zmax2 Pfaff transform, then connection at 1
  |z| <= 0.95            direct series, long
  |z/(z-1)| <= 0.95      Pfaff series, long
  otherwise              failure (NaN), mapped to NonConvergence upstream

All parameter-only quantities (connection coefficients, digamma seeds)
are precomputed once per (a, b, c) into a flat complex pack, see
packs.build_param_pack.
"""
import cmath

EULER_GAMMA = 0.5772156649015328606065

# pack layout (complex128[16])
#  0 a, 1 b, 2 c
#  3 flags: real = 1.0 if terminating series, imag = term count N
#  4..9   connection pack at 1 for (a, b, c):        kind, m0, coef0, coefC, psiA0, psiB0
# 10..15  connection pack at 1 for (a, c-b, c):      same layout
# kind: 0 generic, 1 c = A+B+m0 (m0 >= 1), 2 c = A+B-m0 (m0 >= 1), 3 c = A+B


def _series(A, B, C, w, rel_tol, max_terms):
    """Sum 2F1(A,B;C;w) by the defining series; NaN if not converged."""
    term = 1.0 + 0j
    acc = 1.0 + 0j
    small = 0
    n = 0
    while n < max_terms:
        term = term * (A + n) * (B + n) / ((C + n) * (n + 1.0)) * w
        acc += term
        if abs(term) <= rel_tol * abs(acc) + 1e-300:
            small += 1
            if small >= 2:
                return acc
        else:
            small = 0
        n += 1
    return complex(float("nan"), float("nan"))


def _make_near_one(series):
    def _near_one(kind, m0, coef0, coefC, psiA0, psiB0, A, B, C, om, rel_tol, max_terms):
        """2F1(A,B;C;z) from connection series in om = 1 - z, |om| < 1."""
        if kind == 4:
            # A or B a nonpositive integer: terminating series in z = 1 - om
            zz = 1.0 - om
            nterms = int(m0)
            term = 1.0 + 0j
            acc = 1.0 + 0j
            for n in range(nterms):
                term = term * (A + n) * (B + n) / ((C + n) * (n + 1.0)) * zz
                acc += term
            return acc
        if kind == 0:
            s = C - A - B
            s1 = series(A, B, 1.0 - s, om, rel_tol, max_terms)
            s2 = series(C - A, C - B, 1.0 + s, om, rel_tol, max_terms)
            return coef0 * s1 + coefC * cmath.exp(s * cmath.log(om)) * s2

        lom = cmath.log(om)
        if kind == 3:
            # c = a + b: log series throughout
            pa = psiA0
            pb = psiB0
            h1 = -EULER_GAMMA
            term = 1.0 + 0j
            acc = 0j
            n = 0
            while n < max_terms:
                contrib = term * (2.0 * h1 - pa - pb - lom)
                acc += contrib
                if abs(contrib) <= rel_tol * abs(acc) + 1e-300 and n > 0:
                    break
                pa += 1.0 / (A + n)
                pb += 1.0 / (B + n)
                h1 += 1.0 / (n + 1.0)
                term = term * (A + n) * (B + n) / ((n + 1.0) * (n + 1.0)) * om
                n += 1
            return coef0 * acc

        m = int(m0)
        # harmonic seed psi(m+1)
        h2 = -EULER_GAMMA
        for j in range(1, m + 1):
            h2 += 1.0 / j

        if kind == 1:
            # c = a + b + m, m >= 1
            fin = 0j
            term = 1.0 + 0j
            for n in range(m):
                fin += term
                if n < m - 1:
                    term = term * (A + n) * (B + n) / ((n + 1.0) * (1.0 - m + n)) * om
            pa = psiA0  # psi(A + m + n)
            pb = psiB0
            h1 = -EULER_GAMMA
            # leading 1/(n+m)! factor at n = 0 is 1/m!
            fact = 1.0
            for j in range(1, m + 1):
                fact *= j
            term = 1.0 / fact + 0j
            acc = 0j
            n = 0
            while n < max_terms:
                contrib = term * (lom - h1 - h2 + pa + pb)
                acc += contrib
                if abs(contrib) <= rel_tol * (abs(acc) + 1e-300) and n > 0:
                    break
                pa += 1.0 / (A + m + n)
                pb += 1.0 / (B + m + n)
                h1 += 1.0 / (n + 1.0)
                h2 += 1.0 / (n + m + 1.0)
                term = term * (A + m + n) * (B + m + n) / ((n + 1.0) * (n + m + 1.0)) * om
                n += 1
            omp = cmath.exp(m0 * cmath.log(om))
            return coef0 * fin + coefC * omp * acc

        # kind == 2: c = a + b - m, m >= 1
        fin = 0j
        term = 1.0 + 0j
        for n in range(m):
            fin += term
            if n < m - 1:
                term = term * (A - m + n) * (B - m + n) / ((n + 1.0) * (1.0 - m + n)) * om
        fin = fin * cmath.exp(-m0 * cmath.log(om))
        if coefC == 0:
            return coef0 * fin
        pa = psiA0  # psi(A + n)
        pb = psiB0
        h1 = -EULER_GAMMA
        term = 1.0 + 0j
        # leading 1/(n+m)! factor at n = 0 is 1/m!
        fact = 1.0
        for j in range(1, m + 1):
            fact *= j
        term = term / fact
        acc = 0j
        n = 0
        while n < max_terms:
            contrib = term * (lom - h1 - h2 + pa + pb)
            acc += contrib
            if abs(contrib) <= rel_tol * (abs(acc) + 1e-300) and n > 0:
                break
            pa += 1.0 / (A + n)
            pb += 1.0 / (B + n)
            h1 += 1.0 / (n + 1.0)
            h2 += 1.0 / (n + m + 1.0)
            term = term * (A + n) * (B + n) / ((n + 1.0) * (n + m + 1.0)) * om
            n += 1
        return coef0 * fin + coefC * acc

    return _near_one


def _make_hyp2f1_scalar(series, near_one):
    def hyp2f1_scalar(z, pack, rel_tol, max_terms):
        a = pack[0]
        b = pack[1]
        c = pack[2]
        if pack[3].real == 1.0:
            # terminating: direct series with a fixed term count, any z
            nterms = int(pack[3].imag)
            term = 1.0 + 0j
            acc = 1.0 + 0j
            for n in range(nterms):
                term = term * (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
                acc += term
            return acc
        if z.imag == 0.0 and z.real >= 1.0:
            return complex(float("nan"), float("nan"))
        if z == 0:
            return 1.0 + 0j
        az = abs(z)
        omz = 1.0 - z
        # zmax1/zmax2 widen the series regions (and shrink the connection
        # regions) when the corresponding connection is near-degenerate
        zmax1 = pack[16].real
        zmax2 = pack[17].real
        if az <= zmax1 and (az <= 0.75 or z.real >= -0.5):
            # the widened part of the disc is used only on the stable side:
            # for Re z < -0.5 the direct series cancels catastrophically
            return series(a, b, c, z, rel_tol, max_terms)
        if abs(omz) <= 1.0 - zmax1:
            return near_one(int(pack[4].real), pack[5].real, pack[6], pack[7],
                            pack[8], pack[9], a, b, c, omz, rel_tol, max_terms)
        w = z / (z - 1.0)
        pf = cmath.exp(-a * cmath.log(omz))
        aw = abs(w)
        if aw <= zmax2 and (aw <= 0.75 or w.real >= -0.5):
            return pf * series(a, c - b, c, w, rel_tol, max_terms)
        om2 = 1.0 / omz
        if abs(om2) <= 1.0 - zmax2:
            return pf * near_one(int(pack[10].real), pack[11].real, pack[12],
                                 pack[13], pack[14], pack[15],
                                 a, c - b, c, om2, rel_tol, max_terms)
        if az <= 0.95:
            return series(a, b, c, z, rel_tol, max_terms)
        if abs(w) <= 0.95:
            return pf * series(a, c - b, c, w, rel_tol, max_terms)
        if abs(omz) <= 0.8:
            return near_one(int(pack[4].real), pack[5].real, pack[6], pack[7],
                            pack[8], pack[9], a, b, c, omz, rel_tol, max_terms)
        if abs(om2) <= 0.8:
            return pf * near_one(int(pack[10].real), pack[11].real, pack[12],
                                 pack[13], pack[14], pack[15],
                                 a, c - b, c, om2, rel_tol, max_terms)
        return complex(float("nan"), float("nan"))

    return hyp2f1_scalar


def _make_real_many(hyp2f1_scalar):
    def hyp2f1_real_many(z, out, pack, rel_tol, max_terms):
        for i in range(z.shape[0]):
            out[i] = hyp2f1_scalar(complex(z[i], 0.0), pack, rel_tol, max_terms)

    return hyp2f1_real_many

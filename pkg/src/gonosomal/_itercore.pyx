# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled trajectory kernel.

Same contract and operation order as `_itercore_py.run_trajectory`; the two
backends produce bit-identical float trajectories.
"""

from libc.stdlib cimport free, malloc

BACKEND = "cython"


def run_trajectory(gamma_cols, gtilde, x0, double u0, long long max_iters,
                   double conv_tol, int consec, long long record_every, int run0=0):
    cdef Py_ssize_t n = len(x0)
    cdef double *g = <double *> malloc(n * n * sizeof(double))
    cdef double *gt = <double *> malloc(n * sizeof(double))
    cdef double *x = <double *> malloc(n * sizeof(double))
    cdef double *xn = <double *> malloc(n * sizeof(double))
    if g == NULL or gt == NULL or x == NULL or xn == NULL:
        free(g); free(gt); free(x); free(xn)
        raise MemoryError()

    cdef Py_ssize_t i, k
    cdef double u = u0, un, s, sn, acc, diff, d
    cdef long long t = 0, converged_at = -1, escape_step = -1
    cdef int run = run0

    for k in range(n):
        row = gamma_cols[k]
        for i in range(n):
            g[k * n + i] = row[i]
    for i in range(n):
        gt[i] = gtilde[i]
        x[i] = x0[i]

    rec_ks = []
    rec_states = []
    try:
        while t < max_iters:
            s = 0.0
            for i in range(n):
                s += x[i]
            for k in range(n):
                acc = 0.0
                for i in range(n):
                    acc += g[k * n + i] * x[i]
                xn[k] = acc / s
            acc = 0.0
            for i in range(n):
                acc += gt[i] * x[i]
            un = acc / s
            t += 1
            diff = abs(un - u)
            for k in range(n):
                d = abs(xn[k] - x[k])
                if d > diff:
                    diff = d
            for k in range(n):
                x[k] = xn[k]
            u = un
            if record_every > 0 and t % record_every == 0:
                rec_ks.append(t)
                rec_states.append(tuple([x[i] for i in range(n)]) + (u,))
            sn = 0.0
            for i in range(n):
                sn += x[i]
            if un == 0.0 or sn == 0.0:
                escape_step = t
                break
            if diff < conv_tol:
                run += 1
            else:
                run = 0
            if run >= consec:
                converged_at = t - consec + 1
                break
        final = tuple([x[i] for i in range(n)]) + (u,)
    finally:
        free(g); free(gt); free(x); free(xn)
    return rec_ks, rec_states, converged_at, escape_step, final, t, run

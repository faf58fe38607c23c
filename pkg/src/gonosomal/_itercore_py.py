"""Pure-Python trajectory kernel: the fallback twin of the Cython extension.

Operation order matches `_itercore.pyx` exactly so both backends produce
bit-identical floating-point trajectories.
"""

from __future__ import annotations

BACKEND = "python"


def run_trajectory(gamma_cols, gtilde, x0, u0, max_iters, conv_tol, consec, record_every, run0=0):
    """Iterate the simplified normalised operator from (x0, u0).

    gamma_cols[k][i] holds gamma[i][k] (column-major access pattern). Returns
    (rec_ks, rec_states, converged_at, escape_step, final_state, steps, run)
    with step indices relative to the start state (step 0 is not recorded here).
    converged_at / escape_step are -1 when unset; `run` is the trailing count of
    consecutive small-difference steps, for convergence hand-off.
    """
    n = len(x0)
    x = list(x0)
    u = u0
    xn = [0.0] * n
    rec_ks = []
    rec_states = []
    converged_at = -1
    escape_step = -1
    run = run0
    t = 0
    while t < max_iters:
        s = 0.0
        for i in range(n):
            s += x[i]
        for k in range(n):
            acc = 0.0
            gk = gamma_cols[k]
            for i in range(n):
                acc += gk[i] * x[i]
            xn[k] = acc / s
        acc = 0.0
        for i in range(n):
            acc += gtilde[i] * x[i]
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
            rec_states.append(tuple(x) + (u,))
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
    final = tuple(x) + (u,)
    return rec_ks, rec_states, converged_at, escape_step, final, t, run

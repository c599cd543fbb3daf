#!/usr/bin/env python3
"""Smoke test for the frachelm_py extension module.

Builds the cdylib if needed, loads it without any packaging step, and
exercises each exposed entry point against closed-form oracles.

Usage: python3 python/smoke_test.py [--release]
"""

import math
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module(release: bool):
    profile = "release" if release else "debug"
    cmd = ["cargo", "build", "-p", "frachelm-py"]
    if release:
        cmd.append("--release")
    subprocess.run(cmd, cwd=ROOT, check=True)
    lib = ROOT / "target" / profile / "libfrachelm_py.so"
    if not lib.exists():
        sys.exit(f"extension library not found at {lib}")
    stage = Path(tempfile.mkdtemp(prefix="frachelm-py-"))
    shutil.copy(lib, stage / "frachelm_py.so")
    sys.path.insert(0, str(stage))
    import frachelm_py

    return frachelm_py


def check(label, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] {label}{': ' + detail if detail else ''}")
    return ok


def main():
    fh = load_module("--release" in sys.argv[1:])
    ok = True

    # E_{1,1} is the exponential.
    worst = max(
        abs(fh.ml(1.0, 1.0, z) - math.exp(z)) / math.exp(z)
        for z in [-3.0, -1.0, 0.0, 0.5, 2.0, 5.0]
    )
    ok &= check("ml reduces to exp at alpha=beta=1", worst < 1e-12, f"rel {worst:.2e}")

    # Classical kernels are sinh ratios.
    c, s = fh.kernel(1.0, 2.0, 0.25)
    want_c = math.sinh(2.0 * 0.75) / math.sinh(2.0)
    want_s = math.sinh(2.0 * 0.25) / math.sinh(2.0)
    err = max(abs(c - want_c), abs(s - want_s))
    ok &= check("kernel matches sinh forms at alpha=1", err < 1e-12, f"abs {err:.2e}")

    # Eigenvalue split between the parity families.
    rows = fh.basis("dirichlet", 0.5, 2)
    lambdas = sorted(r["lambda"] for r in rows)
    ok &= check(
        "basis eigenvalues carry the (1 +/- eps) split",
        abs(lambdas[0] - 0.125) < 1e-12 and any(abs(l - 1.5) < 1e-12 for l in lambdas),
        f"lambdas {lambdas}",
    )

    # Caputo derivative of t is t^(1-a)/Gamma(2-a), exact for the scheme.
    m = 64
    samples = [i / m for i in range(m + 1)]
    out = fh.caputo_l1(0.5, samples)
    want = 1.0 / math.gamma(1.5)
    ok &= check(
        "caputo_l1 reproduces D^0.5 t at x=1",
        abs(out[m] - want) < 1e-12,
        f"{out[m]:.12f} vs {want:.12f}",
    )

    # Composed operator annihilates t^alpha.
    out = fh.composed_caputo(0.5, [math.sqrt(i / m) for i in range(m + 1)])
    worst = max(abs(v) for v in out[3:])
    ok &= check("composed_caputo kills t^alpha", worst < 1e-9, f"max {worst:.2e}")

    # Classical single-mode solve against the sinh separation solution.
    problem = fh.Problem("dirichlet", 1.0, "sin(y)", "0", 2)
    sol = problem.solve()
    u = sol.evaluate(0.5, math.pi / 2)
    want = math.sinh(math.sqrt(1.0) * 0.5) / math.sinh(math.sqrt(1.0))
    ok &= check(
        "classical solve matches sinh separation",
        abs(u - want) < 1e-9,
        f"u {u:.12f} vs {want:.12f}",
    )

    # Fractional solve: boundary reproduction and residual refinement.
    problem = fh.Problem("dirichlet", 0.5, "sin(y)", "0", 2, eps=0.3)
    sol = problem.solve()
    edge = abs(sol.evaluate(0.0, 1.0) - math.sin(1.0))
    ok &= check("fractional solve reproduces phi at x=0", edge < 1e-10, f"{edge:.2e}")
    report = sol.residual(32, 33)
    ladder = sol.refine([32, 64])
    shrinking = ladder[1]["max_residual"] <= ladder[0]["max_residual"]
    ok &= check(
        "residual ladder non-increasing",
        shrinking,
        f"{ladder[0]['max_residual']:.3e} -> {ladder[1]['max_residual']:.3e}",
    )
    ok &= check(
        "residual report well formed",
        report["m"] == 32 and report["boundary_x0_error"] < 1e-10,
        f"x0 {report['boundary_x0_error']:.2e}",
    )

    # Grid evaluation is consistent with pointwise evaluation.
    xs, ys, values = sol.grid(5, 5)
    worst = max(
        abs(values[ix][iy] - sol.evaluate(xs[ix], ys[iy]))
        for ix in range(5)
        for iy in range(5)
    )
    ok &= check("grid matches pointwise evaluation", worst == 0.0, f"max {worst:.2e}")

    # Validation surfaces as ValueError.
    try:
        fh.Problem("dirichlet", 0.5, "sin(y)", "0", 2, eps=1.0)
        ok &= check("eps validation raises", False)
    except ValueError as e:
        ok &= check("eps validation raises", "eps" in str(e), str(e))

    if not ok:
        sys.exit(1)
    print("all smoke checks passed")


if __name__ == "__main__":
    main()

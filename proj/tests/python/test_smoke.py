"""Smoke test for the Python bindings.

Run with PYTHONPATH pointing at the build tree's python/ directory.  Prints
one line per check and exits nonzero on any failure.
"""

import math
import os
import sys
import tempfile

import curvebound as cb

failures = []


def check(name, ok):
    print("smoke: %s %s" % ("ok  " if ok else "FAIL", name))
    if not ok:
        failures.append(name)


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol * max(1.0, abs(b))


# profile and kernels
check("phi vanishes at x = 1 when rho t = 2", cb.phi(1.0, 2.0, 1.0) == 0.0)
check("kernel anchor", close(cb.coth_kernel(4.0), 2.0746294414550962, 1e-14))
check(
    "phi composes the kernel",
    close(cb.phi(1.0, 2.0, 0.0), 0.5 * (0.0 - 2.0) + cb.coth_kernel(4.0) / 2.0, 1e-15),
)
check(
    "domain limit",
    close(cb.phi_domain_limit(1.0, 2.0), 1.0 + math.pi**2 / 4.0, 1e-14),
)
check(
    "flat-space right-hand side",
    close(cb.bound_classical_liyau(2.0, 1.0, 0.5), 0.5 + 1.0, 1e-15),
)

# roots
r = cb.roots(1.0, 6.0)
check("two roots under positive curvature", set(r) == {"negative_root", "positive_root"})
check("root ordering", r["negative_root"] < 0.0 < r["positive_root"])
check("positive root at most one", cb.positive_root_at_most_one(1.0, 6.0) is True)
enc = cb.root_enclosures(-1.0, 2.0)
check(
    "sole-root enclosure under negative curvature",
    set(enc) == {"sole_root"} and 1.0 < enc["sole_root"][0] <= enc["sole_root"][1],
)
lower, upper = cb.ultracontractive_envelope(1.0, 2.0, 4.0)
check("convergence envelope straddles one", lower <= 1.0 <= upper)

# gradient profile, conjugate, Harnack
lo, hi = cb.psi_domain(0.0, 2.0, 1.0)
check("flat psi domain", close(lo, -1.0) and math.isinf(hi))
check("psi vanishes at the finite endpoint", cb.psi(0.0, 2.0, 1.0, -1.0) == 0.0)
value, argmax = cb.legendre(0.0, 2.0, 1.0, -0.5)
check("flat conjugate closed form", close(value, 1.0) and close(argmax, 0.0))
exponent, approximate = cb.harnack_exponent(0.0, 2.0, 1.0, 2.0, 1.0)
check(
    "flat harnack exponent",
    close(exponent, math.log(2.0) + 0.25, 1e-8) and approximate is False,
)
check(
    "kernel ratio bound is the exponential",
    close(cb.heat_kernel_ratio_bound(0.0, 2.0, 1.0, 2.0, 1.0), math.exp(exponent), 1e-12),
)

# classical comparisons
a1, b1 = cb.linearized_bound_hyperbolic(-1.0, 1.0, 1.0)
check("li_xu intercept", close(b1, 1.0 + 1.0 / math.tanh(1.0), 1e-12))
rows = cb.dominance_report(-1.0, 3.0, 1.0)
check("dominance table shape", len(rows) == 7 and rows[0]["check"] == "davies(alpha=1.1)")
check("dominance margins", all(row["min_margin"] >= -1e-10 for row in rows))
check(
    "harnack exponent below li_xu",
    cb.harnack_exponent(-1.0, 2.0, 0.5, 1.5, 1.0)[0]
    <= cb.li_xu_harnack_exponent(2.0, 1.0, 0.5, 1.5, 1.0) + 1e-10,
)

# error mapping
try:
    cb.phi(1.0, -1.0, 0.0)
    check("domain errors raise ValueError", False)
except ValueError:
    check("domain errors raise ValueError", True)

# scenario runner plumbing
cfg_text = (
    "space = euclidean\n"
    "n = 2\n"
    "N = 100\n"
    "R = 20\n"
    "f0 = gaussian:0.1:1.0\n"
    "times = 0.5\n"
    "checks = li_yau, logsob\n"
    "tol_factor = 500\n"
)
fd, cfg_path = tempfile.mkstemp(suffix=".cfg")
try:
    with os.fdopen(fd, "w") as handle:
        handle.write(cfg_text)
    reports = cb.run_scenario(cfg_path)
    names = sorted(row["check"] for row in reports)
    check("scenario rows", names == ["li_yau", "logsob", "logsob_inverse"])
    check("scenario checks pass", all(row["passed"] for row in reports))
    check(
        "scenario report fields",
        all(
            set(row) == {"check", "min_margin", "argmin_node", "argmin_time", "tolerance", "passed"}
            for row in reports
        ),
    )
finally:
    os.remove(cfg_path)

if failures:
    print("smoke: %d failure(s)" % len(failures))
    sys.exit(1)
print("smoke: all checks passed")

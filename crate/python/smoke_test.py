"""Smoke test for the `tsa` extension module.

Build and install first, e.g. `pip install maturin && maturin build -m crates/py/Cargo.toml`
followed by `pip install target/wheels/tsa-*.whl`, or copy the cargo-built
`libtsa.so` next to this file as `tsa.so`.
"""

import math
import sys

import tsa


def check(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)
    print("ok:", msg)


def main():
    fns = tsa.list_functions()
    check(len(fns) == 25, "25 registered functions")
    check(len(tsa.list_functions("hard")) == 5, "hard suite has 5 functions")

    check(tsa.evaluate("fc01", [1.0, 2.0]) == 5.0, "sphere(1, 2) = 5")
    check(tsa.evaluate("h02", [2.0, 2.0]) == 0.0, "damavandi singular point")
    x = tsa.known_optimizer("fc16")
    check(abs(tsa.evaluate("fc16", x) - 0.398) < 1e-3, "branin optimizer")

    cfg = tsa.TsaConfig(max_fe=10_000)
    r = tsa.run("fc16", cfg, seed=3)
    check(r.used_fe == 10_000, "budget consumed exactly")
    check(abs(r.best_fitness - 0.397887) < 1e-3, f"branin run reached {r.best_fitness}")
    bests = [b for _, b in r.trace]
    check(all(b2 <= b1 for b1, b2 in zip(bests, bests[1:])), "trace is monotone")
    r2 = tsa.run("fc16", cfg, seed=3)
    check(r2.best_position == r.best_position, "same seed, same result")

    calls = []

    def sphere(v):
        calls.append(1)
        return sum(t * t for t in v)

    r = tsa.optimize(sphere, [(-5.0, 5.0)] * 3, tsa.TsaConfig(max_fe=3_000), seed=1)
    check(len(calls) == 3_000, "callable evaluated exactly max_fe times")
    check(r.best_fitness < 1e-6, f"callable sphere reached {r.best_fitness}")

    def broken(v):
        raise KeyError("boom")

    try:
        tsa.optimize(broken, [(0.0, 1.0)], tsa.TsaConfig(max_fe=100))
        check(False, "exception propagates")
    except KeyError:
        check(True, "exception propagates")

    try:
        tsa.TsaConfig(p_esc=2.0)
        check(False, "invalid config rejected")
    except ValueError:
        check(True, "invalid config rejected")

    w = tsa.wilcoxon([1, 2, 3, 4, 5], [2, 3, 4, 5, 6])
    check(abs(w.p_value - 0.0625) < 1e-12 and not w.reject, "signed-rank p = 0.0625")
    k = tsa.kruskal([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    check(abs(k.statistic - 7.2) < 1e-12, "Kruskal-Wallis H = 7.2")
    check(tsa.normalize_scores([[10, 20, 30]]) == [[0.0, 0.5, 1.0]], "normalized row")
    check(tsa.summarize([1, 2, 3]) == (2.0, 1.0, 1.0), "summary")
    check(math.isclose(tsa.evaluate("h05", tsa.known_optimizer("h05")), -43.2535, abs_tol=1e-3),
          "sine envelope optimum")
    print("all smoke checks passed")


if __name__ == "__main__":
    main()
